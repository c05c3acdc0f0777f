#include "rebalance/resample_output.hpp"

#include "rebalance/error.hpp"

namespace rebalance {

Materialized materialize(const Dataset& dataset, const ResampleOutput& out) {
    const size_t n_syn = out.synthetic_count();
    if (out.synthetic_numeric.size() != dataset.n_numeric() && n_syn > 0)
        fail(Errc::SchemaMismatch, "synthetic block does not match dataset numeric schema");
    if (out.synthetic_cats.size() != dataset.n_categorical() && n_syn > 0)
        fail(Errc::SchemaMismatch, "synthetic block does not match dataset categorical schema");

    Materialized m;
    m.n_original = out.kept_indices.size();
    m.source_index = out.kept_indices;

    std::vector<NumericColumn> num;
    num.reserve(dataset.n_numeric());
    for (size_t j = 0; j < dataset.n_numeric(); ++j) {
        const auto& src = dataset.numeric(j);
        NumericColumn c{src.name, {}};
        c.values.reserve(m.n_original + n_syn);
        for (size_t r : out.kept_indices) c.values.push_back(src.values[r]);
        if (n_syn > 0)
            c.values.insert(c.values.end(), out.synthetic_numeric[j].begin(),
                            out.synthetic_numeric[j].end());
        num.push_back(std::move(c));
    }

    std::vector<CategoricalColumn> cat;
    cat.reserve(dataset.n_categorical());
    for (size_t j = 0; j < dataset.n_categorical(); ++j) {
        const auto& src = dataset.categorical(j);
        CategoricalColumn c{src.name, {}, src.dictionary};
        c.codes.reserve(m.n_original + n_syn);
        for (size_t r : out.kept_indices) c.codes.push_back(src.codes[r]);
        if (n_syn > 0)
            c.codes.insert(c.codes.end(), out.synthetic_cats[j].begin(),
                           out.synthetic_cats[j].end());
        cat.push_back(std::move(c));
    }

    std::vector<uint8_t> labels;
    labels.reserve(m.n_original + n_syn);
    for (size_t r : out.kept_indices) labels.push_back(dataset.labels()[r]);
    labels.insert(labels.end(), out.synthetic_labels.begin(), out.synthetic_labels.end());

    m.data = Dataset(std::move(num), std::move(cat), std::move(labels));
    return m;
}

double achieved_ratio(const Dataset& dataset, const ResampleOutput& out) {
    const auto split = class_partition(dataset);
    size_t n_min = 0, n_maj = 0;
    for (size_t r : out.kept_indices) {
        if (dataset.labels()[r] == split.minority_label)
            ++n_min;
        else
            ++n_maj;
    }
    for (uint8_t y : out.synthetic_labels) {
        if (y == split.minority_label)
            ++n_min;
        else
            ++n_maj;
    }
    if (n_maj == 0) fail(Errc::EmptyClass, "resampled output has no majority rows");
    return static_cast<double>(n_min) / static_cast<double>(n_maj);
}

}  // namespace rebalance
