#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace egr {

/// Worker count from std::thread::hardware_concurrency, at least 1.
inline unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

/// Runs body(worker, begin, end) over [0, n) in chunks pulled from a shared
/// counter. Each worker gets its own index so callers can keep per-worker
/// scratch space. The first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_chunks(std::uint64_t n, unsigned workers, std::uint64_t chunk, Body&& body) {
  workers = std::max(1u, workers);
  chunk = std::max<std::uint64_t>(1, chunk);
  if (workers == 1 || n <= chunk) {
    if (n > 0) body(0u, std::uint64_t{0}, n);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&](unsigned worker) {
    try {
      while (true) {
        const std::uint64_t begin = next.fetch_add(chunk);
        if (begin >= n) break;
        body(worker, begin, std::min(n, begin + chunk));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(n);
    }
  };
  std::vector<std::jthread> threads;
  threads.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) threads.emplace_back(run, w);
  run(0);
  threads.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace egr
