#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace lasserre {

/// Worker count: LASSERRE_LAB_THREADS if set, else hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("LASSERRE_LAB_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, n) on a small thread pool. Callers aggregate into
/// index-addressed slots so results stay order-independent.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  unsigned workers = thread_count();
  if (workers <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  auto run = [&] {
    for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
  };
  unsigned spawn = static_cast<unsigned>(std::min<size_t>(workers, n));
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();
}

}  // namespace lasserre
