#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rebalance {

struct NumericColumn {
    std::string name;
    std::vector<double> values;
};

/// Categorical column stored as dense integer codes plus the string
/// dictionary that maps a code back to its original value. Codes are always
/// in [0, dictionary.size()). Distances and encoders consume codes only.
struct CategoricalColumn {
    std::string name;
    std::vector<int32_t> codes;
    std::vector<std::string> dictionary;
};

/// Columnar table of numeric and categorical features plus binary labels
/// (1 = minority/positive, 0 = majority). Immutable after construction and
/// safe to share across threads.
class Dataset {
public:
    Dataset() = default;
    Dataset(std::vector<NumericColumn> numeric,
            std::vector<CategoricalColumn> categorical,
            std::vector<uint8_t> labels);

    size_t n_rows() const { return labels_.size(); }
    size_t n_numeric() const { return numeric_.size(); }
    size_t n_categorical() const { return categorical_.size(); }

    const std::vector<NumericColumn>& numeric() const { return numeric_; }
    const std::vector<CategoricalColumn>& categorical() const { return categorical_; }
    const std::vector<uint8_t>& labels() const { return labels_; }

    const NumericColumn& numeric(size_t i) const { return numeric_[i]; }
    const CategoricalColumn& categorical(size_t i) const { return categorical_[i]; }

    size_t count_label(uint8_t label) const;

    /// Same column names/dictionaries, possibly different rows.
    bool schema_matches(const Dataset& other) const;

private:
    void validate() const;

    std::vector<NumericColumn> numeric_;
    std::vector<CategoricalColumn> categorical_;
    std::vector<uint8_t> labels_;
};

/// Index lists for the two classes. `minority_label` is the label of the
/// smaller class; ties are broken by declaring label 1 the minority.
struct ClassSplit {
    std::vector<size_t> minority;
    std::vector<size_t> majority;
    uint8_t minority_label = 1;
};

/// Partitions [0, n_rows) into minority/majority index lists (both
/// ascending). Throws EmptyClass if either class has zero rows.
ClassSplit class_partition(const Dataset& dataset);

/// Row subset in the given index order.
Dataset select_rows(const Dataset& dataset, const std::vector<size_t>& rows);

}  // namespace rebalance
