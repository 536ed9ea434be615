#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace deficit_atlas {

/// Worker count: DEFICIT_ATLAS_THREADS if set and positive, else hardware
/// concurrency (at least 1).
inline unsigned thread_count() {
  if (const char* env = std::getenv("DEFICIT_ATLAS_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

/// Static block partition of [0, n) across threads. body(i) must be pure per
/// index, so results are independent of the schedule.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned workers = thread_count();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace deficit_atlas
