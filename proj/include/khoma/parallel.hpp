#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace khoma {

/// Worker count: KHOMA_THREADS if set and positive, else the hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("KHOMA_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Split [0, n) into contiguous ranges and call f(begin, end, slot) for each, in parallel.
/// Slots are numbered in range order so callers can merge results deterministically.
template <class F>
std::size_t parallel_ranges(std::size_t n, F&& f, std::size_t min_chunk = 64) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(1, n / min_chunk));
  if (workers <= 1) {
    f(std::size_t{0}, n, std::size_t{0});
    return 1;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  const std::size_t step = (n + workers - 1) / workers;
  std::size_t slots = 0;
  for (std::size_t lo = 0; lo < n; lo += step, ++slots)
    pool.emplace_back([&, lo, hi = std::min(n, lo + step), slot = slots] {
      try {
        f(lo, hi, slot);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return slots;
}

/// Evaluate f(i) for i in [0, n) in parallel, results in index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
  std::vector<T> out(n);
  parallel_ranges(
      n,
      [&](std::size_t lo, std::size_t hi, std::size_t) {
        for (std::size_t i = lo; i < hi; ++i) out[i] = f(i);
      },
      1);
  return out;
}

}  // namespace khoma
