#pragma once

#include <cstddef>
#include <functional>

namespace arrlab {

/// Worker count: ARRANGEMENT_LAB_THREADS if set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, count). Each index runs exactly once; callers
/// write results into pre-sized slots so output order never depends on the
/// schedule. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace arrlab
