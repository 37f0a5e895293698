#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace wordalg {

// Splits [begin, end) into `jobs` contiguous chunks and calls fn(lo, hi) for
// each, one thread per chunk. fn must only write to state owned by its chunk.
template <class Fn>
void parallel_for_ranges(std::uint64_t begin, std::uint64_t end, unsigned jobs, Fn&& fn) {
  if (end <= begin) return;
  const std::uint64_t total = end - begin;
  const std::uint64_t workers = std::clamp<std::uint64_t>(jobs, 1, total);
  if (workers == 1) {
    fn(begin, end);
    return;
  }
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::uint64_t lo = begin; lo < end; lo += chunk) {
    const std::uint64_t hi = std::min(end, lo + chunk);
    threads.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
}

}  // namespace wordalg
