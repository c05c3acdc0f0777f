#pragma once

#include "rebalance/rng.hpp"

#include <cstdint>
#include <vector>

namespace rebalance {

/// Linear classifier fit by stochastic subgradient descent on the L2
/// regularized hinge loss. Stands in for a full SVM solver where only the
/// margin violators ("support vectors") matter.
struct LinearMargin {
    std::vector<double> weights;
    double bias = 0.0;
    /// Rows with hinge margin y * (w.x + b) <= 1 at the averaged weights.
    std::vector<size_t> support_indices;
    /// Objective lambda/2 |w|^2 + mean hinge, on averaged iterates, per epoch.
    std::vector<double> objective_history;
};

struct MarginFitParams {
    size_t epochs = 40;
    double lambda = 0.01;
};

/// `labels` are +1 / -1 with both classes present (EmptyClass otherwise).
///
/// Normative procedure: weights start at zero; each epoch visits rows in a
/// fresh `rng.shuffle` order; update t (1-based) uses step 1/(lambda * t),
/// shrinks w by (1 - step*lambda), and adds step*y*x (and step*y to the
/// unregularized bias) when the row violates the margin. The returned
/// weights are the average of all post-update iterates.
LinearMargin linear_margin_fit(const std::vector<double>& points, size_t n, size_t dim,
                               const std::vector<int8_t>& labels, SeededRng& rng,
                               const MarginFitParams& params = {});

double hinge_objective(const std::vector<double>& points, size_t n, size_t dim,
                       const std::vector<int8_t>& labels, const std::vector<double>& weights,
                       double bias, double lambda);

}  // namespace rebalance
