#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace npo {

// Worker count for `tasks` independent jobs: hardware concurrency, capped by
// the NPO_THREADS environment variable when it holds a positive integer.
inline int worker_count(std::size_t tasks) {
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("NPO_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0) workers = std::min(workers, cap);
    } catch (const std::exception&) {
    }
  }
  return std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(tasks, 1))));
}

// Runs body(i) for i in [0, count). Results must be written to per-index
// slots so that output order does not depend on scheduling. The first
// exception thrown by any task is rethrown after all workers join.
template <class Body>
void parallel_for(std::size_t count, Body&& body, int workers) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace npo
