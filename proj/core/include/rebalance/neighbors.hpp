#pragma once

#include "rebalance/dataset.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rebalance {

/// Row-major numeric block plus categorical codes, extracted from a Dataset.
/// All neighbor machinery works on this flattened view.
struct FeatureMatrix {
    size_t rows = 0;
    size_t num_dim = 0;
    size_t cat_dim = 0;
    std::vector<double> numeric;  // rows x num_dim
    std::vector<int32_t> cats;    // rows x cat_dim

    const double* numeric_row(size_t r) const { return numeric.data() + r * num_dim; }
    const int32_t* cat_row(size_t r) const { return cats.data() + r * cat_dim; }
};

FeatureMatrix build_feature_matrix(const Dataset& dataset);

/// Per-feature mean/std (population) fitted on a matrix. Constant features
/// get std 1 so they standardize to exactly 0.
struct Standardizer {
    std::vector<double> means;
    std::vector<double> stds;

    static Standardizer fit(const FeatureMatrix& m);
    FeatureMatrix apply(const FeatureMatrix& m) const;
    double unstandardize(size_t dim, double z) const { return z * stds[dim] + means[dim]; }
};

/// Median over numeric features of the per-feature standard deviation of
/// the given rows (computed on the matrix as stored). This is the classic
/// SMOTE-NC penalty convention, taken over the minority rows. Returns 1.0
/// when there are no numeric features.
double categorical_penalty(const FeatureMatrix& m, const std::vector<size_t>& rows);

struct Neighbor {
    size_t id = 0;  // original row id of the neighbor
    double dist = 0.0;

    bool operator==(const Neighbor&) const = default;
};

/// Exact brute-force nearest-neighbor search over a fixed row subset of a
/// standardized FeatureMatrix.
///
/// Metric: Euclidean over numeric dimensions (accumulated in dimension
/// order); with categorical columns, delta^2 is added to the squared
/// distance once per differing code (heterogeneous metric). A zero-penalty
/// or categorical-free index is exactly Euclidean.
///
/// Results are sorted by (distance, id) ascending; the query's own row id is
/// excluded unless `include_self`. Queries are deterministic and may run in
/// parallel over query rows.
class NeighborIndex {
public:
    /// `matrix` must outlive the index. `rows` are the candidate row ids.
    NeighborIndex(const FeatureMatrix& matrix, std::vector<size_t> rows,
                  std::optional<double> delta = std::nullopt);

    size_t size() const { return rows_.size(); }
    double delta() const { return delta_; }
    const std::vector<size_t>& rows() const { return rows_; }

    /// k nearest candidates for each query row id. Throws KTooLarge when a
    /// query has fewer than k candidates (after self-exclusion).
    std::vector<std::vector<Neighbor>> query(const std::vector<size_t>& query_rows, size_t k,
                                             bool include_self = false) const;

    std::vector<Neighbor> query_one(size_t query_row, size_t k, bool include_self = false) const;

private:
    const FeatureMatrix* matrix_;
    std::vector<size_t> rows_;
    double delta_ = 1.0;
};

}  // namespace rebalance
