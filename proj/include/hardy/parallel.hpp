#pragma once

#include <cstddef>
#include <functional>

namespace hardy {

/// Worker cap: HARDY_SHARP_THREADS if set (>= 1), else hardware concurrency.
unsigned thread_cap();

/// Runs body(0..n-1) on up to thread_cap() workers. Iterations must be
/// independent; the first exception thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hardy
