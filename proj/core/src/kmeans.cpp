#include "rebalance/kmeans.hpp"

#include "rebalance/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace rebalance {

namespace {

double sq_dist(const double* a, const double* b, size_t dim) {
    double d2 = 0.0;
    for (size_t j = 0; j < dim; ++j) {
        const double diff = a[j] - b[j];
        d2 += diff * diff;
    }
    return d2;
}

}  // namespace

KMeansModel kmeans_fit(const std::vector<double>& points, size_t n, size_t dim, size_t k,
                       SeededRng& rng, size_t max_iter) {
    if (k == 0) fail(Errc::InvalidArgument, "kmeans needs k >= 1");
    if (k > n)
        fail(Errc::KTooLarge,
             "kmeans k=" + std::to_string(k) + " exceeds point count " + std::to_string(n));

    KMeansModel model;
    model.k = k;
    model.dim = dim;
    model.centroids.resize(k * dim);
    model.assignments.assign(n, 0);

    const auto init = rng.sample(n, k);
    for (size_t c = 0; c < k; ++c)
        for (size_t j = 0; j < dim; ++j)
            model.centroids[c * dim + j] = points[init[c] * dim + j];

    std::vector<double> sums(k * dim);
    std::vector<size_t> counts(k);
    std::vector<size_t> previous(n, std::numeric_limits<size_t>::max());

    for (size_t iter = 0; iter < max_iter; ++iter) {
        bool changed = false;
        double inertia = 0.0;
        for (size_t p = 0; p < n; ++p) {
            size_t best = 0;
            double best_d2 = sq_dist(&points[p * dim], model.centroid(0), dim);
            for (size_t c = 1; c < k; ++c) {
                const double d2 = sq_dist(&points[p * dim], model.centroid(c), dim);
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best = c;
                }
            }
            model.assignments[p] = best;
            if (best != previous[p]) changed = true;
            inertia += best_d2;
        }
        previous = model.assignments;

        model.inertia = inertia;
        model.inertia_history.push_back(inertia);
        model.iterations = iter + 1;
        if (!changed) {
            model.converged = true;
            break;
        }
        if (iter + 1 == max_iter) break;  // keep centroids consistent with assignments

        std::fill(sums.begin(), sums.end(), 0.0);
        std::fill(counts.begin(), counts.end(), 0);
        for (size_t p = 0; p < n; ++p) {
            const size_t c = model.assignments[p];
            ++counts[c];
            for (size_t j = 0; j < dim; ++j) sums[c * dim + j] += points[p * dim + j];
        }
        for (size_t c = 0; c < k; ++c) {
            if (counts[c] == 0) continue;  // empty cluster keeps its centroid
            for (size_t j = 0; j < dim; ++j)
                model.centroids[c * dim + j] = sums[c * dim + j] / static_cast<double>(counts[c]);
        }
    }
    return model;
}

}  // namespace rebalance
