#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "unifft/comm.hpp"
#include "unifft/errors.hpp"
#include "unifft/layout.hpp"

namespace unifft {

namespace detail {

/// Calls fn(local_offset_src, local_offset_dst, run) for every contiguous
/// last-axis run of `region`, with offsets measured inside `src` and `dst`.
template <typename Fn>
void for_each_run(const Box& region, const Box& src, const Box& dst, Fn&& fn) {
  const std::size_t nd = region.extent.size();
  if (region.count() == 0) return;
  const std::size_t run = region.extent[nd - 1];
  Shape idx(nd, 0);  // position inside region, last axis fixed at 0
  while (true) {
    std::size_t s = 0, d = 0;
    for (std::size_t a = 0; a < nd; ++a) {
      const std::size_t g = region.offset[a] + idx[a];
      s = s * src.extent[a] + (g - src.offset[a]);
      d = d * dst.extent[a] + (g - dst.offset[a]);
    }
    fn(s, d, run);
    std::size_t a = nd - 1;
    while (a-- > 0) {
      if (++idx[a] < region.extent[a]) break;
      idx[a] = 0;
    }
    if (a == static_cast<std::size_t>(-1)) return;
  }
}

void check_layouts(const BlockLayout& from, const BlockLayout& to, int size, int rank,
                   std::size_t local_size, std::size_t out_size);

}  // namespace detail

/**
 * Collective redistribution of a global array from one block layout to
 * another. `in` is this rank's block under `from`, `out` receives its block
 * under `to`. Used for transposes, scatter and gather alike.
 *
 * Throws LayoutMismatch when the local buffers disagree with the layouts or
 * when a peer sends a block of unexpected size.
 */
template <typename T>
void redistribute(Communicator& comm, const BlockLayout& from, const BlockLayout& to,
                  std::span<const T> in, std::span<T> out) {
  const int size = comm.size();
  const int rank = comm.rank();
  detail::check_layouts(from, to, size, rank, in.size(), out.size());
  const Box& mine_from = from.boxes[static_cast<std::size_t>(rank)];
  const Box& mine_to = to.boxes[static_cast<std::size_t>(rank)];

  std::vector<Bytes> send(static_cast<std::size_t>(size));
  for (int dst = 0; dst < size; ++dst) {
    const Box region = intersect(mine_from, to.boxes[static_cast<std::size_t>(dst)]);
    std::vector<T> packed(region.count());
    detail::for_each_run(region, mine_from, region, [&](std::size_t s, std::size_t d, std::size_t n) {
      std::copy_n(in.begin() + static_cast<std::ptrdiff_t>(s), n, packed.begin() + static_cast<std::ptrdiff_t>(d));
    });
    send[static_cast<std::size_t>(dst)] = to_bytes(std::span<const T>(packed));
  }

  const auto received = comm.all_to_all_variable(std::move(send));
  for (int src = 0; src < size; ++src) {
    const Box region = intersect(from.boxes[static_cast<std::size_t>(src)], mine_to);
    const auto& bytes = received[static_cast<std::size_t>(src)];
    if (bytes.size() != region.count() * sizeof(T)) {
      throw LayoutMismatch("rank " + std::to_string(rank) + " expected " +
                           std::to_string(region.count()) + " values from rank " +
                           std::to_string(src) + ", got " + std::to_string(bytes.size() / sizeof(T)));
    }
    const auto values = from_bytes<T>(bytes);
    detail::for_each_run(region, region, mine_to, [&](std::size_t s, std::size_t d, std::size_t n) {
      std::copy_n(values.begin() + static_cast<std::ptrdiff_t>(s), n, out.begin() + static_cast<std::ptrdiff_t>(d));
    });
  }
}

/// Redistribution of a complex block so that a different axis becomes
/// local. Applying it with the layouts swapped restores the input exactly.
std::vector<Complex> transpose_exchange(Communicator& comm, std::span<const Complex> local_block,
                                        const BlockLayout& layout_from, const BlockLayout& layout_to);

}  // namespace unifft
