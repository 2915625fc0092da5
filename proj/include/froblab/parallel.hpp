#pragma once

#include <cstddef>
#include <functional>

namespace froblab {

/// Worker count: FROBLAB_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_budget();

/// Runs body(i) for i in [0, n) on up to thread_budget() threads. The body
/// must only touch state owned by index i. The first exception is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace froblab
