#pragma once

#include <functional>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "unifft/comm.hpp"

namespace unifft {

/**
 * Runs `program` once per rank, each rank on its own thread, wired to an
 * in-process communicator. Collectives are matched by call index, so message
 * delivery depends only on (sender, receiver, call index).
 *
 * If any rank throws, the first non-deadlock failure in rank order is
 * rethrown as RankFailure. Ranks left waiting on a collective that can no
 * longer complete raise DeadlockDetected; if that is the only kind of
 * failure, DeadlockDetected is rethrown.
 */
void run_ranks(int size, const std::function<void(Communicator&)>& program);

template <typename Program>
auto run_spmd(int size, Program&& program) {
  using Result = std::invoke_result_t<Program&, Communicator&>;
  if constexpr (std::is_void_v<Result>) {
    run_ranks(size, [&](Communicator& comm) { program(comm); });
  } else {
    std::vector<std::optional<Result>> slots(size > 0 ? static_cast<std::size_t>(size) : 0);
    run_ranks(size, [&](Communicator& comm) {
      slots[static_cast<std::size_t>(comm.rank())].emplace(program(comm));
    });
    std::vector<Result> results;
    results.reserve(slots.size());
    for (auto& s : slots) results.push_back(std::move(*s));
    return results;
  }
}

}  // namespace unifft
