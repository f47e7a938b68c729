#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace polarimeter {

/// Worker cap: POLARIMETER_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t worker_count();

namespace detail {
void run_chunks(std::size_t count, const std::function<void(std::size_t)>& body);
}

/// Evaluates fn(i) for i in [0, count) and returns the results in index
/// order. Work is split across worker_count() threads; the output never
/// depends on the split.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<Result> out(count);
  detail::run_chunks(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace polarimeter
