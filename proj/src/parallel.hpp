#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace zfp::detail {

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, total) into `jobs` contiguous strides and runs fn(worker, begin, end)
/// on each, one thread per stride. Exceptions from workers are rethrown on the caller.
template <typename Fn>
void parallel_strides(std::uint64_t total, unsigned jobs, Fn&& fn) {
  jobs = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_jobs(jobs), total)));
  if (jobs == 1) {
    fn(0U, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  const std::uint64_t stride = (total + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t begin = std::min(total, stride * w);
    const std::uint64_t end = std::min(total, begin + stride);
    workers.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace zfp::detail
