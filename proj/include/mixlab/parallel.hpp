#pragma once

#include <cstddef>
#include <functional>

namespace mixlab {

/// Thread cap: min(hardware, MIXLAB_THREADS). At least 1.
unsigned max_threads();

/// Runs body(begin, end) over a contiguous partition of [0, n).
/// Callers must write results by index so the outcome is independent of the
/// thread count; reductions happen after the join, in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace mixlab
