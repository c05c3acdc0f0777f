#include "rebalance/synth.hpp"

#include "rebalance/error.hpp"
#include "rebalance/rng.hpp"

#include <cmath>
#include <string>

namespace rebalance {

Dataset make_synthetic(const SynthSpec& spec) {
    if (!(spec.fraud_ratio > 0.0) || !(spec.fraud_ratio < 0.5))
        fail(Errc::InvalidRatio,
             "fraud_ratio must be in (0, 0.5), got " + std::to_string(spec.fraud_ratio));
    if (spec.n_rows < 2) fail(Errc::InvalidArgument, "need at least 2 rows");
    if (spec.clusters == 0) fail(Errc::InvalidArgument, "need at least 1 cluster");
    if (spec.n_categorical > 0 && spec.cardinality < 2)
        fail(Errc::InvalidArgument, "categorical cardinality must be >= 2");

    const auto n_min =
        static_cast<size_t>(std::llround(static_cast<double>(spec.n_rows) * spec.fraud_ratio));
    if (n_min == 0)
        fail(Errc::InvalidRatio, "fraud_ratio rounds to zero minority rows at this size");
    const size_t n_maj = spec.n_rows - n_min;

    SeededRng rng(spec.seed);
    const size_t d = spec.n_numeric;

    // Blob centers. Majority blobs sit near the origin; each minority blob
    // is a majority-scale center pushed `separation` along a random unit
    // direction, which produces overlap proportional to the shift.
    std::vector<double> maj_centers(spec.clusters * d);
    for (auto& v : maj_centers) v = 1.5 * rng.normal();
    std::vector<double> min_centers(spec.clusters * d);
    for (size_t c = 0; c < spec.clusters; ++c) {
        std::vector<double> dir(d);
        double norm2 = 0.0;
        for (size_t j = 0; j < d; ++j) {
            dir[j] = rng.normal();
            norm2 += dir[j] * dir[j];
        }
        const double norm = norm2 > 0.0 ? std::sqrt(norm2) : 1.0;
        for (size_t j = 0; j < d; ++j)
            min_centers[c * d + j] = 1.5 * rng.normal() + spec.separation * dir[j] / norm;
    }

    // Categorical skew: per column, majority codes are near-uniform while
    // minority mass concentrates on a seeded preferred code.
    std::vector<size_t> preferred(spec.n_categorical);
    for (auto& p : preferred) p = static_cast<size_t>(rng.below(spec.cardinality));

    std::vector<uint8_t> labels;
    labels.reserve(spec.n_rows);
    for (size_t i = 0; i < n_maj; ++i) labels.push_back(0);
    for (size_t i = 0; i < n_min; ++i) labels.push_back(1);
    rng.shuffle(labels);

    std::vector<NumericColumn> numeric(d);
    for (size_t j = 0; j < d; ++j) {
        numeric[j].name = "num" + std::to_string(j);
        numeric[j].values.reserve(spec.n_rows);
    }
    std::vector<CategoricalColumn> categorical(spec.n_categorical);
    for (size_t j = 0; j < spec.n_categorical; ++j) {
        categorical[j].name = "cat" + std::to_string(j);
        categorical[j].codes.reserve(spec.n_rows);
        for (size_t v = 0; v < spec.cardinality; ++v)
            categorical[j].dictionary.push_back("c" + std::to_string(v));
    }

    for (size_t r = 0; r < spec.n_rows; ++r) {
        const bool minority = labels[r] == 1;
        const size_t blob = static_cast<size_t>(rng.below(spec.clusters));
        const double* center = minority ? &min_centers[blob * d] : &maj_centers[blob * d];
        for (size_t j = 0; j < d; ++j)
            numeric[j].values.push_back(center[j] + rng.normal());
        for (size_t j = 0; j < spec.n_categorical; ++j) {
            size_t code;
            if (minority && rng.unit() < 0.6) {
                code = preferred[j];
            } else {
                code = static_cast<size_t>(rng.below(spec.cardinality));
            }
            categorical[j].codes.push_back(static_cast<int32_t>(code));
        }
    }

    return Dataset(std::move(numeric), std::move(categorical), std::move(labels));
}

}  // namespace rebalance
