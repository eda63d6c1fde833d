#pragma once

#include <cstddef>
#include <functional>

namespace trapcub {

/// Upper bound on worker threads used inside the library. 0 means the
/// hardware concurrency. Affects speed only, never results.
void set_thread_limit(unsigned limit) noexcept;
unsigned thread_limit() noexcept;

/// Runs body(i) for i in [0, count), split into contiguous blocks over at
/// most thread_limit() threads. Work below min_parallel items runs inline.
/// The first exception in index order is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t min_parallel = 64);

}  // namespace trapcub
