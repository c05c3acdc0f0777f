#pragma once

#include "rebalance/dataset.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace rebalance {

/// Ordered target-statistics encoder for categorical columns.
///
/// Training rows are visited in a seeded random permutation; the encoding of
/// row t uses only the rows strictly before t in that permutation:
///
///     encoded = (label_sum_before + a * p) / (count_before + a)
///
/// with smoothing a > 0 and prior p = global minority rate of the training
/// data. A category's first occurrence therefore encodes to exactly p.
/// Inference rows are encoded with the final cumulative statistics, so a
/// category never seen in training also encodes to p.
class OrderedTargetEncoder {
public:
    struct Params {
        double smoothing = 1.0;
    };

    /// Fits on `train` and returns the ordered-encoded training table:
    /// original numeric columns followed by one numeric column per
    /// categorical column (named "<col>_ts"), labels preserved.
    static std::pair<OrderedTargetEncoder, Dataset> fit_transform(const Dataset& train,
                                                                  uint64_t permutation_seed,
                                                                  Params params = {});

    /// Encodes with full-training statistics. `data` must carry the same
    /// categorical schema and dictionaries as the fit data.
    Dataset transform(const Dataset& data) const;

    double prior() const { return prior_; }
    double smoothing() const { return smoothing_; }

    /// Final cumulative (count, label_sum) for a column/code; for tests.
    std::pair<size_t, double> stats(size_t column, int32_t code) const;

private:
    struct ColumnStats {
        std::vector<size_t> counts;  // by code
        std::vector<double> sums;
    };

    std::vector<ColumnStats> stats_;
    std::vector<std::string> cat_names_;
    std::vector<std::vector<std::string>> dictionaries_;
    double prior_ = 0.0;
    double smoothing_ = 1.0;
};

}  // namespace rebalance
