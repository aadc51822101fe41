#pragma once

#include <cstddef>
#include <functional>

namespace regime_lab {

/// Worker count: hardware concurrency, capped by REGIME_LAB_THREADS when set.
std::size_t worker_count();

/// Calls body(i) for every i in [0, n). Work is split into contiguous blocks,
/// one per worker; callers write results by index so output never depends on
/// scheduling. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace regime_lab
