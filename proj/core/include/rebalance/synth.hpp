#pragma once

#include "rebalance/dataset.hpp"

#include <cstdint>

namespace rebalance {

/// Gaussian-cluster generator standing in for a real transaction table.
/// Majority rows draw from `clusters` blobs near the origin; minority rows
/// draw from blobs shifted by `separation` along seeded random directions,
/// so the classes overlap but are learnable. Categorical columns get
/// class-skewed code frequencies.
struct SynthSpec {
    size_t n_rows = 1000;
    double fraud_ratio = 0.01;  // must be in (0, 0.5)
    size_t n_numeric = 6;
    size_t n_categorical = 2;
    size_t clusters = 3;
    double separation = 2.5;
    size_t cardinality = 8;
    uint64_t seed = 0;
};

/// Exact minority count = round(n_rows * fraud_ratio). Same spec, same
/// dataset, bit for bit. Throws InvalidRatio outside (0, 0.5).
Dataset make_synthetic(const SynthSpec& spec);

}  // namespace rebalance
