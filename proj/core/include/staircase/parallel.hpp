#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace staircase {

/// Worker cap: STAIRCASE_LAB_THREADS if set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
inline int thread_limit() {
  if (const char* env = std::getenv("STAIRCASE_LAB_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
      // Unparseable values fall back to the hardware default.
    }
  }
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

/// Calls body(lo, hi) on disjoint contiguous chunks covering [begin, end).
/// Runs inline when the range is small or only one worker is allowed.
/// Chunks touch disjoint data by contract, so results do not depend on the
/// number of workers.
template <class Body>
void parallel_chunks(std::size_t begin, std::size_t end, std::size_t min_chunk, Body&& body) {
  const std::size_t total = end > begin ? end - begin : 0;
  const auto workers = static_cast<std::size_t>(
      std::min<std::size_t>(static_cast<std::size_t>(thread_limit()),
                            min_chunk == 0 ? total : std::max<std::size_t>(1, total / min_chunk)));
  if (workers <= 1) {
    if (total > 0) body(begin, end);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t step = (total + workers - 1) / workers;
  for (std::size_t lo = begin; lo < end; lo += step) {
    std::size_t hi = std::min(end, lo + step);
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace staircase
