#pragma once

#include <cstddef>
#include <functional>

namespace pdsym {

/// Number of worker threads: the PDSYM_THREADS environment variable when set
/// to a positive integer, otherwise hardware concurrency (at least 1).
unsigned worker_count();

/// Runs body(0..count-1) across worker threads. Each index is executed
/// exactly once; the caller must make indices write to disjoint locations,
/// which also keeps results independent of the schedule. Exceptions from the
/// body are rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace pdsym
