#include "rebalance/linear_margin.hpp"

#include "rebalance/error.hpp"

#include <cmath>

namespace rebalance {

double hinge_objective(const std::vector<double>& points, size_t n, size_t dim,
                       const std::vector<int8_t>& labels, const std::vector<double>& weights,
                       double bias, double lambda) {
    double w2 = 0.0;
    for (double w : weights) w2 += w * w;
    double hinge = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double margin = bias;
        for (size_t j = 0; j < dim; ++j) margin += weights[j] * points[i * dim + j];
        margin *= labels[i];
        hinge += std::max(0.0, 1.0 - margin);
    }
    return 0.5 * lambda * w2 + hinge / static_cast<double>(n);
}

LinearMargin linear_margin_fit(const std::vector<double>& points, size_t n, size_t dim,
                               const std::vector<int8_t>& labels, SeededRng& rng,
                               const MarginFitParams& params) {
    bool has_pos = false, has_neg = false;
    for (int8_t y : labels) (y > 0 ? has_pos : has_neg) = true;
    if (!has_pos || !has_neg)
        fail(Errc::EmptyClass, "linear margin fit needs both classes");

    std::vector<double> w(dim, 0.0);
    double b = 0.0;
    std::vector<double> w_sum(dim, 0.0);
    double b_sum = 0.0;
    size_t t = 0;

    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;

    LinearMargin result;
    for (size_t epoch = 0; epoch < params.epochs; ++epoch) {
        rng.shuffle(order);
        for (size_t i : order) {
            ++t;
            const double step = 1.0 / (params.lambda * static_cast<double>(t));
            double margin = b;
            for (size_t j = 0; j < dim; ++j) margin += w[j] * points[i * dim + j];
            margin *= labels[i];

            const double shrink = 1.0 - step * params.lambda;
            for (size_t j = 0; j < dim; ++j) w[j] *= shrink;
            if (margin < 1.0) {
                const double scale = step * static_cast<double>(labels[i]);
                for (size_t j = 0; j < dim; ++j) w[j] += scale * points[i * dim + j];
                b += scale;
            }
            for (size_t j = 0; j < dim; ++j) w_sum[j] += w[j];
            b_sum += b;
        }
        std::vector<double> w_avg(dim);
        for (size_t j = 0; j < dim; ++j) w_avg[j] = w_sum[j] / static_cast<double>(t);
        const double b_avg = b_sum / static_cast<double>(t);
        result.objective_history.push_back(
            hinge_objective(points, n, dim, labels, w_avg, b_avg, params.lambda));
    }

    result.weights.resize(dim);
    for (size_t j = 0; j < dim; ++j) result.weights[j] = w_sum[j] / static_cast<double>(t);
    result.bias = b_sum / static_cast<double>(t);

    for (size_t i = 0; i < n; ++i) {
        double margin = result.bias;
        for (size_t j = 0; j < dim; ++j) margin += result.weights[j] * points[i * dim + j];
        margin *= labels[i];
        if (margin <= 1.0) result.support_indices.push_back(i);
    }
    return result;
}

}  // namespace rebalance
