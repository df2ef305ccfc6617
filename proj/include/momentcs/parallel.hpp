#ifndef MOMENTCS_PARALLEL_HPP
#define MOMENTCS_PARALLEL_HPP

#include <functional>

namespace momentcs {

/// Worker count for parallel sections: the MOMENT_CS_THREADS environment
/// variable when set to a positive value, otherwise the hardware thread
/// count (0 or unset means auto).
int worker_count();

/// Runs fn(begin, end) over a partition of [0, n) on up to worker_count()
/// threads. Chunks are contiguous index ranges, so callers that write to
/// per-index slots get scheduling-independent results.
void parallel_for(long n, const std::function<void(long, long)>& fn);

}  // namespace momentcs

#endif
