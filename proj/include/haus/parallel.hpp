#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace haus {

// Worker cap: HAUS_THREADS env var when set, hardware concurrency otherwise.
inline int worker_count() {
  if (const char* env = std::getenv("HAUS_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, n).  Results must be written by index into
// caller-owned storage; the index partition is static, so output is
// identical for any worker count.
inline void parallel_for_index(std::size_t n,
                               const std::function<void(std::size_t)>& fn) {
  const int workers = worker_count();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const int used = static_cast<int>(std::min<std::size_t>(workers, n));
  pool.reserve(used);
  for (int w = 0; w < used; ++w) {
    pool.emplace_back([&fn, n, w, used] {
      for (std::size_t i = w; i < n; i += used) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace haus
