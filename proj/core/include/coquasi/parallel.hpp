#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace coquasi {

/// Smallest i in [0, count) with fails(i) true, scanning contiguous shards on
/// `jobs` threads. The result does not depend on `jobs`.
template <class Pred>
std::optional<std::uint64_t> first_failure(std::uint64_t count, unsigned jobs, Pred fails) {
  if (count == 0) return std::nullopt;
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2 * static_cast<std::uint64_t>(jobs)) {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (fails(i)) return i;
    }
    return std::nullopt;
  }
  const std::uint64_t shard = (count + jobs - 1) / jobs;
  std::vector<std::optional<std::uint64_t>> found(jobs);
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        const std::uint64_t lo = w * shard;
        const std::uint64_t hi = std::min(count, lo + shard);
        for (std::uint64_t i = lo; i < hi; ++i) {
          if (fails(i)) {
            found[w] = i;
            return;
          }
        }
      });
    }
  }
  for (const auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

}  // namespace coquasi
