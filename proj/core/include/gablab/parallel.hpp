#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gablab {

/// Runs fn(begin, end) over `jobs` contiguous chunks of [0, count). Chunk
/// boundaries depend only on (count, jobs), so reductions that merge chunk
/// results in chunk order are schedule-independent. The first exception
/// thrown by any chunk is rethrown on the calling thread.
template <class Fn>
void parallel_chunks(std::uint64_t count, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    fn(std::uint64_t{0}, count, 0u);
    return;
  }
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, count));
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex mu;
  for (unsigned j = 0; j < jobs; ++j) {
    const std::uint64_t begin = count * j / jobs;
    const std::uint64_t end = count * (j + 1) / jobs;
    pool.emplace_back([&, begin, end, j] {
      try {
        fn(begin, end, j);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace gablab
