#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace batchlp {

// Runs fn(i) for every i in [begin, end) on up to `workers` threads. Work is
// handed out one index at a time, so the assignment of indices to threads is
// unspecified; fn must only write state owned by index i. The first exception
// thrown by fn is rethrown after all threads join.
template <class Fn>
void parallel_for(std::size_t begin, std::size_t end, std::size_t workers, Fn&& fn) {
  if (begin >= end) return;
  const std::size_t count = end - begin;
  workers = std::clamp<std::size_t>(workers, 1, count);
  if (workers == 1) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{begin};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    for (std::size_t i = next.fetch_add(1, std::memory_order_relaxed); i < end;
         i = next.fetch_add(1, std::memory_order_relaxed)) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace batchlp
