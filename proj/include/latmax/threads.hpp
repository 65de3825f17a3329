#ifndef LATMAX_THREADS_HPP
#define LATMAX_THREADS_HPP

#include <functional>

namespace latmax {

/// Worker count from the LATMAX_THREADS environment variable: 0 means
/// serial, unset falls back to the hardware concurrency (capped at 8).
int worker_count();

/// Runs fn(0..n-1), possibly on several threads. Each index is processed
/// exactly once; callers keep determinism by writing to per-index slots
/// and reducing serially.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace latmax

#endif
