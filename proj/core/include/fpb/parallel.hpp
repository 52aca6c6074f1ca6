#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fpb {

// Worker count: FPB_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int worker_count();

// Calls body(i) for every i in [0, count) on up to worker_count() threads.
// Indices are handed out in contiguous chunks; the first exception thrown by
// any call is rethrown on the calling thread.
template <class Body>
void parallel_for(std::size_t count, Body&& body, std::size_t chunk = 64) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(worker_count()), (count + chunk - 1) / chunk);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      const std::size_t begin = next.fetch_add(chunk);
      if (begin >= count) return;
      const std::size_t end = std::min(count, begin + chunk);
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace fpb
