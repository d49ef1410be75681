#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dlab {

/// Worker count from DLAB_JOBS, defaulting to 1.
inline unsigned default_jobs() {
  if (const char* env = std::getenv("DLAB_JOBS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 1;
}

/// Runs body(i) for i in [0, n) on up to `jobs` threads.
///
/// Indices are split into contiguous blocks. Callers write to slot i only, so
/// results never depend on scheduling. The first exception is rethrown.
template <typename Body>
void parallel_for(std::size_t n, unsigned jobs, Body&& body) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  const std::size_t block = (n + jobs - 1) / jobs;
  for (unsigned t = 0; t < jobs; ++t) {
    const std::size_t lo = t * block;
    const std::size_t hi = std::min(n, lo + block);
    if (lo >= hi) break;
    workers.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace dlab
