#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace heisdens {

/// Evaluates task(i) for i in [0, count) on up to `threads` workers and
/// returns the results in index order, so any later reduction is independent
/// of the worker count. The first exception thrown by a task is rethrown.
template <typename Task>
auto parallel_map(std::size_t count, unsigned threads, Task&& task)
    -> std::vector<decltype(task(std::size_t{}))> {
  using Result = decltype(task(std::size_t{}));
  std::vector<Result> results(count);
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1u), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      results[i] = task(i);
    }
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        results[i] = task(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        next.store(count);
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back(worker);
  }
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return results;
}

}  // namespace heisdens
