#ifndef CRITINF_TASK_POOL_HPP
#define CRITINF_TASK_POOL_HPP

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace critinf {

/// Parallelism cap: CRITINF_THREADS when set, hardware concurrency otherwise.
inline unsigned thread_cap() {
  if (const char* env = std::getenv("CRITINF_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

/// Runs fn(0..count-1) on up to thread_cap() threads.  Tasks must be pure
/// (they are in this codebase: all shared values are immutable).  Exceptions
/// are rethrown in index order, so failures are deterministic.
template <typename Fn>
void run_indexed(std::size_t count, Fn&& fn) {
  if (count == 0) return;
  unsigned cap = thread_cap();
  if (cap > count) cap = static_cast<unsigned>(count);
  if (cap <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errs(count);
  std::vector<std::thread> pool;
  pool.reserve(cap);
  for (unsigned t = 0; t < cap; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          errs[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (std::size_t i = 0; i < count; ++i)
    if (errs[i]) std::rethrow_exception(errs[i]);
}

}  // namespace critinf

#endif
