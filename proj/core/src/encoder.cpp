#include "rebalance/encoder.hpp"

#include "rebalance/error.hpp"
#include "rebalance/rng.hpp"

#include <numeric>

namespace rebalance {

namespace {

Dataset assemble(const Dataset& source, std::vector<std::vector<double>> encoded) {
    std::vector<NumericColumn> numeric = source.numeric();
    for (size_t j = 0; j < source.n_categorical(); ++j)
        numeric.push_back({source.categorical(j).name + "_ts", std::move(encoded[j])});
    return Dataset(std::move(numeric), {}, source.labels());
}

}  // namespace

std::pair<OrderedTargetEncoder, Dataset> OrderedTargetEncoder::fit_transform(
    const Dataset& train, uint64_t permutation_seed, Params params) {
    if (!(params.smoothing > 0.0))
        fail(Errc::InvalidArgument, "encoder smoothing must be > 0");

    OrderedTargetEncoder enc;
    enc.smoothing_ = params.smoothing;
    const size_t n = train.n_rows();
    if (n == 0) fail(Errc::InvalidArgument, "cannot fit encoder on empty dataset");

    const auto& labels = train.labels();
    enc.prior_ = std::accumulate(labels.begin(), labels.end(), 0.0) / static_cast<double>(n);

    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    SeededRng rng(permutation_seed);
    rng.shuffle(perm);

    enc.stats_.resize(train.n_categorical());
    std::vector<std::vector<double>> encoded(train.n_categorical());
    for (size_t j = 0; j < train.n_categorical(); ++j) {
        const auto& col = train.categorical(j);
        enc.cat_names_.push_back(col.name);
        enc.dictionaries_.push_back(col.dictionary);
        auto& st = enc.stats_[j];
        st.counts.assign(col.dictionary.size(), 0);
        st.sums.assign(col.dictionary.size(), 0.0);
        encoded[j].assign(n, 0.0);
        const double a = enc.smoothing_;
        const double p = enc.prior_;
        for (size_t t = 0; t < n; ++t) {
            const size_t r = perm[t];
            const auto code = static_cast<size_t>(col.codes[r]);
            encoded[j][r] = (st.sums[code] + a * p) / (static_cast<double>(st.counts[code]) + a);
            st.counts[code] += 1;
            st.sums[code] += static_cast<double>(labels[r]);
        }
    }
    Dataset out = assemble(train, std::move(encoded));
    return {std::move(enc), std::move(out)};
}

Dataset OrderedTargetEncoder::transform(const Dataset& data) const {
    if (data.n_categorical() != cat_names_.size())
        fail(Errc::SchemaMismatch, "categorical column count differs from fit data");
    std::vector<std::vector<double>> encoded(data.n_categorical());
    for (size_t j = 0; j < data.n_categorical(); ++j) {
        const auto& col = data.categorical(j);
        if (col.name != cat_names_[j] || col.dictionary != dictionaries_[j])
            fail(Errc::SchemaMismatch,
                 "categorical column '" + col.name + "' does not match fit data");
        const auto& st = stats_[j];
        encoded[j].reserve(data.n_rows());
        for (int32_t code : col.codes) {
            const auto c = static_cast<size_t>(code);
            encoded[j].push_back((st.sums[c] + smoothing_ * prior_) /
                                 (static_cast<double>(st.counts[c]) + smoothing_));
        }
    }
    return assemble(data, std::move(encoded));
}

std::pair<size_t, double> OrderedTargetEncoder::stats(size_t column, int32_t code) const {
    const auto& st = stats_.at(column);
    return {st.counts.at(static_cast<size_t>(code)), st.sums.at(static_cast<size_t>(code))};
}

}  // namespace rebalance
