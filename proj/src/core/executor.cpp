#include "mjmcmc/executor.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace mjmcmc {

Executor::Executor(std::size_t threads)
    : threads_(threads == 0 ? default_thread_count() : threads) {}

std::size_t Executor::default_thread_count() {
  if (const char* env = std::getenv("MJMCMC_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void Executor::parallel_for(std::size_t n,
                            const std::function<void(std::size_t, std::size_t)>& body,
                            std::size_t min_block) const {
  if (n == 0) return;
  const std::size_t blocks =
      std::min(threads_, std::max<std::size_t>(1, n / std::max<std::size_t>(1, min_block)));
  if (blocks <= 1) {
    body(0, n);
    return;
  }
  std::vector<std::exception_ptr> errors(blocks);
  std::vector<std::jthread> workers;
  workers.reserve(blocks - 1);
  const std::size_t step = (n + blocks - 1) / blocks;
  auto run = [&](std::size_t b) {
    const std::size_t begin = b * step;
    const std::size_t end = std::min(n, begin + step);
    if (begin >= end) return;
    try {
      body(begin, end);
    } catch (...) {
      errors[b] = std::current_exception();
    }
  };
  for (std::size_t b = 1; b < blocks; ++b) workers.emplace_back(run, b);
  run(0);
  workers.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace mjmcmc
