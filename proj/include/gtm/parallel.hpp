#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace gtm {

// jobs <= 0 means one worker per hardware thread.
inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs f(i) for i in [0, count) across up to `jobs` threads.  Indices are
// dealt round-robin so the assignment is deterministic; results must be
// written to per-index slots by the caller.  If several calls throw, the
// exception of the smallest index is rethrown.
template <class F>
void parallel_for(std::int64_t count, int jobs, F&& f) {
  if (count <= 0) return;
  const int workers =
      static_cast<int>(std::min<std::int64_t>(resolve_jobs(jobs), count));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::int64_t i = w; i < count; i += workers) {
        try {
          f(i);
        } catch (...) {
          errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace gtm
