#pragma once

#include <cstddef>
#include <cstring>
#include <span>
#include <type_traits>
#include <vector>

namespace unifft {

using Bytes = std::vector<std::byte>;

/**
 * Message-passing endpoint of one rank. Every operation is a blocking
 * collective: all ranks must call the same operations in the same order.
 */
class Communicator {
 public:
  virtual ~Communicator() = default;

  virtual int rank() const noexcept = 0;
  virtual int size() const noexcept = 0;

  /// send[j] is delivered to rank j; result[i] is what rank i sent here.
  virtual std::vector<Bytes> all_to_all_variable(std::vector<Bytes> send) = 0;

  /// Rank 0 receives every payload indexed by sender; other ranks get an
  /// empty vector.
  virtual std::vector<Bytes> gather_to_root(Bytes payload) = 0;

  virtual void barrier() = 0;
};

using RankContext = Communicator;

template <typename T>
Bytes to_bytes(std::span<const T> values) {
  static_assert(std::is_trivially_copyable_v<T>);
  Bytes out(values.size_bytes());
  if (!out.empty()) std::memcpy(out.data(), values.data(), out.size());
  return out;
}

template <typename T>
std::vector<T> from_bytes(const Bytes& bytes) {
  static_assert(std::is_trivially_copyable_v<T>);
  std::vector<T> out(bytes.size() / sizeof(T));
  if (!out.empty()) std::memcpy(out.data(), bytes.data(), out.size() * sizeof(T));
  return out;
}

/// Typed all-to-all over trivially copyable values.
template <typename T>
std::vector<std::vector<T>> all_to_all(Communicator& comm, const std::vector<std::vector<T>>& send) {
  std::vector<Bytes> raw;
  raw.reserve(send.size());
  for (const auto& v : send) raw.push_back(to_bytes(std::span<const T>(v)));
  auto received = comm.all_to_all_variable(std::move(raw));
  std::vector<std::vector<T>> out;
  out.reserve(received.size());
  for (const auto& b : received) out.push_back(from_bytes<T>(b));
  return out;
}

template <typename T>
std::vector<std::vector<T>> gather(Communicator& comm, std::span<const T> values) {
  auto received = comm.gather_to_root(to_bytes(values));
  std::vector<std::vector<T>> out;
  out.reserve(received.size());
  for (const auto& b : received) out.push_back(from_bytes<T>(b));
  return out;
}

}  // namespace unifft
