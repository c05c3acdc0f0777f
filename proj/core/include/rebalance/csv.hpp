#pragma once

#include "rebalance/dataset.hpp"

#include <string>
#include <vector>

namespace rebalance {

/// Column roles for CSV ingestion. The schema is supplied by the caller
/// (CLI flags or config), never inferred. Every header column must be named
/// in exactly one role and every named column must exist in the header.
struct CsvSchema {
    std::vector<std::string> numeric;
    std::vector<std::string> categorical;
    std::string label;
};

/// Reads a headered CSV into a Dataset. Categorical dictionaries are built
/// in first-occurrence order. Numeric parse failures and non-0/1 labels are
/// ParseError with row/column location, never silent NaNs. Fields are split
/// on ',' with no quoting support.
Dataset read_csv_dataset(const std::string& path, const CsvSchema& schema);

/// Writes columns in dataset order (numeric, categorical, label). Doubles
/// are printed with shortest round-trip formatting, so write-then-read
/// reproduces identical values, codes and labels.
void write_csv_dataset(const std::string& path, const Dataset& dataset);

/// Schema matching the column layout write_csv_dataset produces.
CsvSchema schema_of(const Dataset& dataset);

std::string format_double(double v);

}  // namespace rebalance
