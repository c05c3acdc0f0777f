#pragma once

#include "rebalance/dataset.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace rebalance {

/// How a synthetic row was generated: interpolation from the base row toward
/// the neighbor row with coefficient lambda. Duplicates carry lambda = 0 and
/// base == neighbor. Aggregate rows (cluster centroids) carry `kNone` for
/// both indices.
struct Provenance {
    static constexpr size_t kNone = std::numeric_limits<size_t>::max();
    size_t base = kNone;
    size_t neighbor = kNone;
    double lambda = 0.0;

    bool operator==(const Provenance&) const = default;
};

/// Result of one resampling run: the original row indices retained plus a
/// columnar block of generated rows, schema-aligned with the source dataset.
/// Synthetic rows are labeled minority; the single exception is
/// cluster_centroids, whose centroid rows replace (and are labeled as) the
/// majority class.
struct ResampleOutput {
    std::vector<size_t> kept_indices;  // sorted ascending, subset of [0, n_rows)

    std::vector<std::vector<double>> synthetic_numeric;  // per numeric column
    std::vector<std::vector<int32_t>> synthetic_cats;    // per categorical column
    std::vector<uint8_t> synthetic_labels;
    std::vector<Provenance> provenance;  // one entry per synthetic row

    std::vector<std::string> warnings;

    size_t synthetic_count() const { return synthetic_labels.size(); }

    bool operator==(const ResampleOutput& other) const {
        return kept_indices == other.kept_indices &&
               synthetic_numeric == other.synthetic_numeric &&
               synthetic_cats == other.synthetic_cats &&
               synthetic_labels == other.synthetic_labels &&
               provenance == other.provenance;
    }
};

/// Resampled dataset materialized as kept original rows (ascending) followed
/// by synthetic rows in generation order. `source_index` maps each of the
/// first `n_original` rows back to its index in the source dataset.
struct Materialized {
    Dataset data;
    std::vector<size_t> source_index;
    size_t n_original = 0;
};

Materialized materialize(const Dataset& dataset, const ResampleOutput& out);

/// N_min / N_maj of a materialized output (labels as in the source dataset).
double achieved_ratio(const Dataset& dataset, const ResampleOutput& out);

}  // namespace rebalance
