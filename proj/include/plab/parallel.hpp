#pragma once

#include <cstddef>
#include <functional>

namespace plab {

/// Worker count for parallel sweeps: hardware concurrency, capped by the
/// PROMISE_LAB_THREADS environment variable when set.
std::size_t worker_count();

/// Runs fn(i) for i in [begin, end) across worker_count() threads in
/// contiguous chunks. fn must be safe for concurrent invocation on distinct
/// indices; the first exception (if any) is rethrown on the caller.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& fn);

}  // namespace plab
