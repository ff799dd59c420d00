#pragma once

// Minimal deterministic parallel-for. The worker count is capped by the
// ADSMAX_THREADS environment variable (1 disables threading).

#include <functional>

namespace adsmax {

int max_threads();

// Splits [0, n) into contiguous chunks, one per worker. The body must be
// safe to run concurrently on disjoint indices.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace adsmax
