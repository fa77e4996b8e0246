#pragma once

#include <cstddef>
#include <functional>

namespace mjmcmc {

/// Data-parallel loop runner. Work is split into contiguous blocks, so the
/// partition never affects results as long as the body writes only to its own slots.
class Executor {
 public:
  /// threads == 0 picks default_thread_count().
  explicit Executor(std::size_t threads = 0);

  std::size_t threads() const noexcept { return threads_; }

  /// Calls body(begin, end) over disjoint blocks covering [0, n). If a block
  /// throws, the exception from the lowest-indexed failing block is rethrown.
  void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                    std::size_t min_block = 64) const;

  /// MJMCMC_THREADS if set, else std::thread::hardware_concurrency().
  static std::size_t default_thread_count();

 private:
  std::size_t threads_;
};

}  // namespace mjmcmc
