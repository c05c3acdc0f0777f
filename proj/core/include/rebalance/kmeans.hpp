#pragma once

#include "rebalance/rng.hpp"

#include <cstddef>
#include <vector>

namespace rebalance {

struct KMeansModel {
    size_t k = 0;
    size_t dim = 0;
    std::vector<double> centroids;     // k x dim, row-major
    std::vector<size_t> assignments;   // per point, nearest centroid (ties -> lowest id)
    double inertia = 0.0;              // sum of squared distances to assigned centroid
    std::vector<double> inertia_history;  // inertia after each Lloyd iteration
    size_t iterations = 0;
    bool converged = false;

    const double* centroid(size_t c) const { return centroids.data() + c * dim; }
};

/// Lloyd's algorithm with seeded initialization.
///
/// Normative procedure (the test oracles retrace it bit for bit):
///   1. init: centroids are the points at `rng.sample(n, k)`, in draw order;
///   2. assign: each point goes to the centroid with the smallest squared
///      distance (dimension-order accumulation), ties to the lowest id;
///   3. update: each non-empty cluster's centroid becomes the mean of its
///      points summed in ascending point order; empty clusters keep their
///      previous centroid;
///   4. stop when an assignment pass changes nothing or after max_iter.
///
/// Inertia never increases across iterations.
KMeansModel kmeans_fit(const std::vector<double>& points, size_t n, size_t dim, size_t k,
                       SeededRng& rng, size_t max_iter = 100);

}  // namespace rebalance
