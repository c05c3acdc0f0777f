#include "rebalance/dataset.hpp"

#include "rebalance/error.hpp"

#include <algorithm>

namespace rebalance {

Dataset::Dataset(std::vector<NumericColumn> numeric,
                 std::vector<CategoricalColumn> categorical,
                 std::vector<uint8_t> labels)
    : numeric_(std::move(numeric)),
      categorical_(std::move(categorical)),
      labels_(std::move(labels)) {
    validate();
}

void Dataset::validate() const {
    const size_t n = labels_.size();
    for (const auto& c : numeric_) {
        if (c.values.size() != n)
            fail(Errc::SchemaMismatch,
                 "numeric column '" + c.name + "' has " + std::to_string(c.values.size()) +
                     " rows, expected " + std::to_string(n));
    }
    for (const auto& c : categorical_) {
        if (c.codes.size() != n)
            fail(Errc::SchemaMismatch,
                 "categorical column '" + c.name + "' has " + std::to_string(c.codes.size()) +
                     " rows, expected " + std::to_string(n));
        const auto card = static_cast<int32_t>(c.dictionary.size());
        for (int32_t code : c.codes) {
            if (code < 0 || code >= card)
                fail(Errc::SchemaMismatch,
                     "categorical column '" + c.name + "' has code " + std::to_string(code) +
                         " outside [0, " + std::to_string(card) + ")");
        }
    }
    for (uint8_t y : labels_) {
        if (y > 1)
            fail(Errc::ParseError, "labels must be 0/1");
    }
}

size_t Dataset::count_label(uint8_t label) const {
    return static_cast<size_t>(std::count(labels_.begin(), labels_.end(), label));
}

bool Dataset::schema_matches(const Dataset& other) const {
    if (numeric_.size() != other.numeric_.size()) return false;
    if (categorical_.size() != other.categorical_.size()) return false;
    for (size_t i = 0; i < numeric_.size(); ++i)
        if (numeric_[i].name != other.numeric_[i].name) return false;
    for (size_t i = 0; i < categorical_.size(); ++i)
        if (categorical_[i].name != other.categorical_[i].name) return false;
    return true;
}

ClassSplit class_partition(const Dataset& dataset) {
    ClassSplit out;
    std::vector<size_t> ones, zeros;
    const auto& y = dataset.labels();
    for (size_t i = 0; i < y.size(); ++i) {
        (y[i] == 1 ? ones : zeros).push_back(i);
    }
    if (ones.empty() || zeros.empty())
        fail(Errc::EmptyClass, "both classes must be present (have " +
                                   std::to_string(ones.size()) + " positive, " +
                                   std::to_string(zeros.size()) + " negative rows)");
    // Ties go to label 1: positives are the minority throughout.
    if (ones.size() <= zeros.size()) {
        out.minority = std::move(ones);
        out.majority = std::move(zeros);
        out.minority_label = 1;
    } else {
        out.minority = std::move(zeros);
        out.majority = std::move(ones);
        out.minority_label = 0;
    }
    return out;
}

Dataset select_rows(const Dataset& dataset, const std::vector<size_t>& rows) {
    std::vector<NumericColumn> num;
    num.reserve(dataset.n_numeric());
    for (const auto& c : dataset.numeric()) {
        NumericColumn out{c.name, {}};
        out.values.reserve(rows.size());
        for (size_t r : rows) out.values.push_back(c.values[r]);
        num.push_back(std::move(out));
    }
    std::vector<CategoricalColumn> cat;
    cat.reserve(dataset.n_categorical());
    for (const auto& c : dataset.categorical()) {
        CategoricalColumn out{c.name, {}, c.dictionary};
        out.codes.reserve(rows.size());
        for (size_t r : rows) out.codes.push_back(c.codes[r]);
        cat.push_back(std::move(out));
    }
    std::vector<uint8_t> labels;
    labels.reserve(rows.size());
    for (size_t r : rows) labels.push_back(dataset.labels()[r]);
    return Dataset(std::move(num), std::move(cat), std::move(labels));
}

}  // namespace rebalance
