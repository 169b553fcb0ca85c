#include "unifft/spmd.hpp"

#include <condition_variable>
#include <exception>
#include <map>
#include <mutex>
#include <string>
#include <thread>

#include "unifft/errors.hpp"

namespace unifft {

namespace {

enum class CollectiveKind { all_to_all, gather, barrier };

const char* kind_name(CollectiveKind kind) {
  switch (kind) {
    case CollectiveKind::all_to_all: return "all_to_all_variable";
    case CollectiveKind::gather: return "gather_to_root";
    case CollectiveKind::barrier: return "barrier";
  }
  return "?";
}

// Shared state of one run_ranks call. `blocked` counts ranks waiting on a
// collective that has not completed; when blocked + finished reaches the
// world size nothing can make progress.
class Hub {
 public:
  explicit Hub(int size) : size_(size) {}

  std::vector<Bytes> exchange(int rank, std::size_t call, CollectiveKind kind,
                              std::vector<Bytes> outgoing) {
    std::unique_lock lock(mutex_);
    if (deadlock_) throw DeadlockDetected(deadlock_message(rank, call, kind));

    Slot& slot = slots_[call];
    if (slot.arrived == 0) {
      slot.kind = kind;
      slot.payload.resize(static_cast<std::size_t>(size_));
    } else if (slot.kind != kind) {
      slot.mismatch = true;
    }
    slot.payload[static_cast<std::size_t>(rank)] = std::move(outgoing);
    ++slot.arrived;

    if (slot.arrived == size_ && !slot.mismatch) {
      slot.complete = true;
      blocked_ -= size_ - 1;
      cv_.notify_all();
    } else {
      ++blocked_;
      while (!slot.complete) {
        if (!deadlock_ && blocked_ + finished_ == size_) {
          deadlock_ = true;
          cv_.notify_all();
        }
        if (deadlock_) {
          --blocked_;
          throw DeadlockDetected(deadlock_message(rank, call, kind));
        }
        cv_.wait(lock);
      }
    }

    std::vector<Bytes> incoming(static_cast<std::size_t>(size_));
    for (std::size_t src = 0; src < incoming.size(); ++src) {
      auto& from_src = slot.payload[src];
      if (from_src.size() > static_cast<std::size_t>(rank)) {
        incoming[src] = std::move(from_src[static_cast<std::size_t>(rank)]);
      }
    }
    if (++slot.consumed == size_) slots_.erase(call);
    return incoming;
  }

  void finish() {
    std::lock_guard lock(mutex_);
    ++finished_;
    cv_.notify_all();
  }

 private:
  struct Slot {
    CollectiveKind kind{};
    int arrived = 0;
    int consumed = 0;
    bool mismatch = false;
    bool complete = false;
    std::vector<std::vector<Bytes>> payload;  // [sender][receiver]
  };

  static std::string deadlock_message(int rank, std::size_t call, CollectiveKind kind) {
    return "rank " + std::to_string(rank) + " blocked in " + kind_name(kind) + " (collective #" +
           std::to_string(call) + ") that can never complete";
  }

  int size_;
  std::mutex mutex_;
  std::condition_variable cv_;
  std::map<std::size_t, Slot> slots_;
  int blocked_ = 0;
  int finished_ = 0;
  bool deadlock_ = false;
};

class InProcessCommunicator final : public Communicator {
 public:
  InProcessCommunicator(Hub& hub, int rank, int size) : hub_(hub), rank_(rank), size_(size) {}

  int rank() const noexcept override { return rank_; }
  int size() const noexcept override { return size_; }

  std::vector<Bytes> all_to_all_variable(std::vector<Bytes> send) override {
    send.resize(static_cast<std::size_t>(size_));
    return hub_.exchange(rank_, calls_++, CollectiveKind::all_to_all, std::move(send));
  }

  std::vector<Bytes> gather_to_root(Bytes payload) override {
    std::vector<Bytes> send(1);
    send[0] = std::move(payload);
    auto received = hub_.exchange(rank_, calls_++, CollectiveKind::gather, std::move(send));
    if (rank_ != 0) return {};
    return received;
  }

  void barrier() override { hub_.exchange(rank_, calls_++, CollectiveKind::barrier, {}); }

 private:
  Hub& hub_;
  int rank_;
  int size_;
  std::size_t calls_ = 0;
};

std::string describe(const std::exception_ptr& error) {
  try {
    std::rethrow_exception(error);
  } catch (const std::exception& e) {
    return e.what();
  } catch (...) {
    return "unknown exception";
  }
}

bool is_deadlock(const std::exception_ptr& error) {
  try {
    std::rethrow_exception(error);
  } catch (const DeadlockDetected&) {
    return true;
  } catch (...) {
    return false;
  }
}

}  // namespace

void run_ranks(int size, const std::function<void(Communicator&)>& program) {
  if (size < 1) throw BadParameters("run_spmd needs at least one rank, got " + std::to_string(size));

  Hub hub(size);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(size));
  {
    std::vector<std::jthread> threads;
    threads.reserve(static_cast<std::size_t>(size));
    for (int r = 0; r < size; ++r) {
      threads.emplace_back([&, r] {
        InProcessCommunicator comm(hub, r, size);
        try {
          program(comm);
        } catch (...) {
          errors[static_cast<std::size_t>(r)] = std::current_exception();
        }
        hub.finish();
      });
    }
  }

  for (int r = 0; r < size; ++r) {
    const auto& e = errors[static_cast<std::size_t>(r)];
    if (e && !is_deadlock(e)) throw RankFailure(r, describe(e), e);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace unifft
