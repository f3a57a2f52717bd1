#pragma once

#include <cstddef>
#include <functional>

namespace raagham {

/// Worker bound: RAAGHAM_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads. Each index is
/// handled exactly once; results written by index stay deterministic. The
/// first exception thrown by a body is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace raagham
