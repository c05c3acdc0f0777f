#pragma once

#include <cstddef>

namespace rebalance {

/// Desired N_minority / N_majority after resampling. The paper's default is
/// 0.1 for every method that takes a ratio.
struct SamplingStrategy {
    double target_ratio = 0.1;
};

enum class Direction { Under, Over };

/// Target count for a resampling run:
///   under -> post-resample majority count, floor(n_min / ratio)
///   over  -> post-resample minority count, floor(n_maj * ratio)
///
/// floor (not round) keeps the achieved ratio from overshooting the request.
/// Throws AlreadySatisfied when the target would move counts in the wrong
/// direction (under: target > n_maj; over: target < n_min). A target equal
/// to the current count is a valid no-op.
size_t resolve_counts(SamplingStrategy strategy, size_t n_min, size_t n_maj,
                      Direction direction);

}  // namespace rebalance
