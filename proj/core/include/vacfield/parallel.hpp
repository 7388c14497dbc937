#pragma once

#include <cstddef>
#include <functional>

namespace vacfield {

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index is
/// handled by exactly one call, so any per-index result written by `body` is
/// independent of the worker count. The first exception thrown by a worker is
/// rethrown on the calling thread.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

} // namespace vacfield
