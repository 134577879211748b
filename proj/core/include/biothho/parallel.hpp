#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace biothho {

/// Worker count taken from the BIOT_HHO_THREADS environment variable (default 1).
inline unsigned thread_count() {
  if (const char* env = std::getenv("BIOT_HHO_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

/// Run fn(i) for i in [0, n). Work is chunked over thread_count() workers; each
/// iteration must write only to its own slot so results are identical to the
/// serial order.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const unsigned nw = thread_count();
  if (nw <= 1 || n < 2 * nw) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(nw);
  const std::size_t chunk = (n + nw - 1) / nw;
  for (unsigned w = 0; w < nw; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace biothho
