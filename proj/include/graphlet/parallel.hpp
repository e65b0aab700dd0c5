#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace graphlet {

// 0 means "use the hardware concurrency".
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Static contiguous partition of [0, count) across `threads` workers.
// body(begin, end, worker_id). Results must not depend on the partition:
// workers write disjoint output rows or private buffers merged by exact
// sums, so output is identical for every thread count. The first exception
// thrown by a worker is rethrown on the calling thread.
template <typename F>
void parallel_for(std::int64_t count, int threads, F&& body) {
  threads = resolve_threads(threads);
  if (threads <= 1 || count < 2 * threads) {
    body(std::int64_t{0}, count, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::exception_ptr error;
  std::mutex error_mu;
  std::int64_t chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    std::int64_t begin = t * chunk;
    std::int64_t end = begin + chunk < count ? begin + chunk : count;
    if (begin >= end) break;
    pool.emplace_back([&body, &error, &error_mu, begin, end, t] {
      try {
        body(begin, end, t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace graphlet
