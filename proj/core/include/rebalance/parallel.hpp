#pragma once

#include <cstddef>
#include <functional>

namespace rebalance {

/// Worker count: REBALANCE_THREADS if set (>= 1), else hardware concurrency.
size_t thread_count();

/// Splits [0, n) into contiguous chunks and runs `fn(begin, end)` on worker
/// threads. Chunks are disjoint, so deterministic per-element work stays
/// deterministic. Runs inline when n is small or one worker is configured.
void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn);

}  // namespace rebalance
