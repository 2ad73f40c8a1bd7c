#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace nlmod {

// Number of worker threads used by the sweep-style computations. Every
// output element is produced by exactly one thread and no reductions cross
// thread boundaries, so results are bit-identical for any setting.
struct Parallelism {
  unsigned threads = 1;
};

// Calls body(i) for i in [0, count), splitting the range into contiguous
// blocks, one per thread. The first exception thrown by any block is
// rethrown on the calling thread after all workers finish.
template <typename Body>
void parallel_for(std::size_t count, Parallelism par, Body&& body) {
  const std::size_t workers =
      std::clamp<std::size_t>(par.threads, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t block = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = w * block;
      const std::size_t hi = std::min(count, lo + block);
      if (lo >= hi) break;
      pool.emplace_back([lo, hi, &body, &slot = failures[w]] {
        try {
          for (std::size_t i = lo; i < hi; ++i) body(i);
        } catch (...) {
          slot = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

}  // namespace nlmod
