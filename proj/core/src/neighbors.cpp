#include "rebalance/neighbors.hpp"

#include "rebalance/error.hpp"
#include "rebalance/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

namespace rebalance {

FeatureMatrix build_feature_matrix(const Dataset& dataset) {
    FeatureMatrix m;
    m.rows = dataset.n_rows();
    m.num_dim = dataset.n_numeric();
    m.cat_dim = dataset.n_categorical();
    m.numeric.resize(m.rows * m.num_dim);
    m.cats.resize(m.rows * m.cat_dim);
    for (size_t j = 0; j < m.num_dim; ++j) {
        const auto& col = dataset.numeric(j).values;
        for (size_t r = 0; r < m.rows; ++r) m.numeric[r * m.num_dim + j] = col[r];
    }
    for (size_t j = 0; j < m.cat_dim; ++j) {
        const auto& col = dataset.categorical(j).codes;
        for (size_t r = 0; r < m.rows; ++r) m.cats[r * m.cat_dim + j] = col[r];
    }
    return m;
}

Standardizer Standardizer::fit(const FeatureMatrix& m) {
    Standardizer s;
    s.means.assign(m.num_dim, 0.0);
    s.stds.assign(m.num_dim, 1.0);
    if (m.rows == 0) return s;
    for (size_t j = 0; j < m.num_dim; ++j) {
        double sum = 0.0;
        for (size_t r = 0; r < m.rows; ++r) sum += m.numeric[r * m.num_dim + j];
        const double mean = sum / static_cast<double>(m.rows);
        double var = 0.0;
        for (size_t r = 0; r < m.rows; ++r) {
            const double d = m.numeric[r * m.num_dim + j] - mean;
            var += d * d;
        }
        var /= static_cast<double>(m.rows);
        const double std = std::sqrt(var);
        s.means[j] = mean;
        s.stds[j] = std > 0.0 ? std : 1.0;
    }
    return s;
}

FeatureMatrix Standardizer::apply(const FeatureMatrix& m) const {
    FeatureMatrix out = m;
    for (size_t r = 0; r < m.rows; ++r)
        for (size_t j = 0; j < m.num_dim; ++j)
            out.numeric[r * m.num_dim + j] = (m.numeric[r * m.num_dim + j] - means[j]) / stds[j];
    return out;
}

double categorical_penalty(const FeatureMatrix& m, const std::vector<size_t>& rows) {
    if (m.num_dim == 0 || rows.empty()) return 1.0;
    std::vector<double> stds(m.num_dim, 0.0);
    for (size_t j = 0; j < m.num_dim; ++j) {
        double sum = 0.0;
        for (size_t r : rows) sum += m.numeric[r * m.num_dim + j];
        const double mean = sum / static_cast<double>(rows.size());
        double var = 0.0;
        for (size_t r : rows) {
            const double d = m.numeric[r * m.num_dim + j] - mean;
            var += d * d;
        }
        stds[j] = std::sqrt(var / static_cast<double>(rows.size()));
    }
    std::sort(stds.begin(), stds.end());
    const size_t n = stds.size();
    // median: mean of the two middle values for even n
    const double med = (n % 2 == 1) ? stds[n / 2] : 0.5 * (stds[n / 2 - 1] + stds[n / 2]);
    return med;
}

NeighborIndex::NeighborIndex(const FeatureMatrix& matrix, std::vector<size_t> rows,
                             std::optional<double> delta)
    : matrix_(&matrix), rows_(std::move(rows)) {
    delta_ = delta.value_or(1.0);
}

namespace {

// Worst-first ordering for the candidate heap: larger (dist2, id) on top.
struct Cand {
    double dist2;
    size_t id;
};
struct Worse {
    bool operator()(const Cand& a, const Cand& b) const {
        if (a.dist2 != b.dist2) return a.dist2 < b.dist2;
        return a.id < b.id;
    }
};

}  // namespace

std::vector<Neighbor> NeighborIndex::query_one(size_t query_row, size_t k,
                                               bool include_self) const {
    auto res = query({query_row}, k, include_self);
    return std::move(res.front());
}

std::vector<std::vector<Neighbor>> NeighborIndex::query(const std::vector<size_t>& query_rows,
                                                        size_t k, bool include_self) const {
    if (k == 0) fail(Errc::InvalidArgument, "knn query needs k >= 1");
    const FeatureMatrix& m = *matrix_;
    const double delta2 = delta_ * delta_;
    std::vector<std::vector<Neighbor>> results(query_rows.size());
    // workers must not throw; remember the first starved query instead
    std::atomic<size_t> starved{std::numeric_limits<size_t>::max()};

    parallel_for(query_rows.size(), [&](size_t qb, size_t qe) {
        std::vector<Cand> heap;
        heap.reserve(k + 1);
        for (size_t qi = qb; qi < qe; ++qi) {
            const size_t q = query_rows[qi];
            const double* qn = m.numeric_row(q);
            const int32_t* qc = m.cat_row(q);
            heap.clear();
            for (size_t c : rows_) {
                if (!include_self && c == q) continue;
                const bool full = heap.size() == k;
                const double worst = full ? heap.front().dist2 : 0.0;
                const double* cn = m.numeric_row(c);
                double d2 = 0.0;
                bool pruned = false;
                for (size_t j = 0; j < m.num_dim; ++j) {
                    const double diff = qn[j] - cn[j];
                    d2 += diff * diff;
                    if (full && d2 > worst) {
                        pruned = true;
                        break;
                    }
                }
                if (pruned) continue;
                if (m.cat_dim > 0) {
                    const int32_t* cc = m.cat_row(c);
                    for (size_t j = 0; j < m.cat_dim; ++j) {
                        if (qc[j] != cc[j]) d2 += delta2;
                    }
                    if (full && d2 > worst) continue;
                }
                const Cand cand{d2, c};
                if (!full) {
                    heap.push_back(cand);
                    std::push_heap(heap.begin(), heap.end(), Worse{});
                } else if (Worse{}(cand, heap.front())) {
                    // strictly better than the current worst (dist2, id)
                    std::pop_heap(heap.begin(), heap.end(), Worse{});
                    heap.back() = cand;
                    std::push_heap(heap.begin(), heap.end(), Worse{});
                }
            }
            if (heap.size() < k) {
                size_t expected = std::numeric_limits<size_t>::max();
                starved.compare_exchange_strong(expected, q);
                continue;
            }
            std::sort_heap(heap.begin(), heap.end(), Worse{});
            auto& out = results[qi];
            out.resize(heap.size());
            for (size_t i = 0; i < heap.size(); ++i)
                out[i] = Neighbor{heap[i].id, std::sqrt(heap[i].dist2)};
        }
    });
    if (starved.load() != std::numeric_limits<size_t>::max())
        fail(Errc::KTooLarge, "query row " + std::to_string(starved.load()) +
                                  " has fewer than k=" + std::to_string(k) + " candidates");
    return results;
}

}  // namespace rebalance
