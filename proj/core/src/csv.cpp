#include "rebalance/csv.hpp"

#include "rebalance/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace rebalance {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

[[noreturn]] void parse_fail(const std::string& what, size_t row, const std::string& col) {
    fail(Errc::ParseError, what + " at row " + std::to_string(row) + ", column '" + col + "'");
}

double parse_double(const std::string& field, size_t row, const std::string& col) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        parse_fail("cannot parse numeric value '" + field + "'", row, col);
    return value;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

Dataset read_csv_dataset(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) fail(Errc::IoError, "cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) fail(Errc::ParseError, "'" + path + "' is empty (header required)");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split_line(line);

    std::unordered_map<std::string, size_t> col_pos;
    for (size_t i = 0; i < header.size(); ++i) {
        if (!col_pos.emplace(header[i], i).second)
            fail(Errc::SchemaMismatch, "duplicate column '" + header[i] + "' in header");
    }

    auto locate = [&](const std::string& name) {
        auto it = col_pos.find(name);
        if (it == col_pos.end())
            fail(Errc::SchemaMismatch, "schema column '" + name + "' not found in header");
        return it->second;
    };

    std::vector<size_t> numeric_pos, cat_pos;
    for (const auto& n : schema.numeric) numeric_pos.push_back(locate(n));
    for (const auto& n : schema.categorical) cat_pos.push_back(locate(n));
    const size_t label_pos = locate(schema.label);

    if (schema.numeric.size() + schema.categorical.size() + 1 != header.size())
        fail(Errc::SchemaMismatch,
             "schema covers " +
                 std::to_string(schema.numeric.size() + schema.categorical.size() + 1) +
                 " columns but header has " + std::to_string(header.size()));

    std::vector<NumericColumn> numeric;
    for (const auto& n : schema.numeric) numeric.push_back({n, {}});
    std::vector<CategoricalColumn> categorical;
    for (const auto& n : schema.categorical) categorical.push_back({n, {}, {}});
    std::vector<std::unordered_map<std::string, int32_t>> dicts(schema.categorical.size());
    std::vector<uint8_t> labels;

    size_t row = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        ++row;
        const auto fields = split_line(line);
        if (fields.size() != header.size())
            fail(Errc::ParseError, "row " + std::to_string(row) + " has " +
                                       std::to_string(fields.size()) + " fields, expected " +
                                       std::to_string(header.size()));
        for (size_t j = 0; j < numeric_pos.size(); ++j)
            numeric[j].values.push_back(
                parse_double(fields[numeric_pos[j]], row, schema.numeric[j]));
        for (size_t j = 0; j < cat_pos.size(); ++j) {
            const std::string& v = fields[cat_pos[j]];
            auto [it, inserted] = dicts[j].emplace(v, static_cast<int32_t>(dicts[j].size()));
            if (inserted) categorical[j].dictionary.push_back(v);
            categorical[j].codes.push_back(it->second);
        }
        const std::string& lv = fields[label_pos];
        if (lv == "0")
            labels.push_back(0);
        else if (lv == "1")
            labels.push_back(1);
        else
            parse_fail("label value '" + lv + "' (labels must be 0/1)", row, schema.label);
    }

    return Dataset(std::move(numeric), std::move(categorical), std::move(labels));
}

void write_csv_dataset(const std::string& path, const Dataset& dataset) {
    std::ofstream out(path);
    if (!out) fail(Errc::IoError, "cannot write '" + path + "'");

    std::ostringstream header;
    bool first = true;
    auto emit = [&](const std::string& name) {
        if (name.find(',') != std::string::npos || name.find('\n') != std::string::npos)
            fail(Errc::InvalidArgument, "column name '" + name + "' contains a delimiter");
        if (!first) header << ',';
        header << name;
        first = false;
    };
    for (const auto& c : dataset.numeric()) emit(c.name);
    for (const auto& c : dataset.categorical()) emit(c.name);
    emit("label");
    out << header.str() << '\n';

    for (const auto& c : dataset.categorical())
        for (const auto& v : c.dictionary)
            if (v.find(',') != std::string::npos || v.find('\n') != std::string::npos)
                fail(Errc::InvalidArgument,
                     "categorical value '" + v + "' contains a delimiter (quoting unsupported)");

    const size_t n = dataset.n_rows();
    for (size_t r = 0; r < n; ++r) {
        std::string line;
        for (const auto& c : dataset.numeric()) {
            line += format_double(c.values[r]);
            line += ',';
        }
        for (const auto& c : dataset.categorical()) {
            line += c.dictionary[static_cast<size_t>(c.codes[r])];
            line += ',';
        }
        line += dataset.labels()[r] ? '1' : '0';
        out << line << '\n';
    }
    if (!out) fail(Errc::IoError, "failed writing '" + path + "'");
}

CsvSchema schema_of(const Dataset& dataset) {
    CsvSchema s;
    for (const auto& c : dataset.numeric()) s.numeric.push_back(c.name);
    for (const auto& c : dataset.categorical()) s.categorical.push_back(c.name);
    s.label = "label";
    return s;
}

}  // namespace rebalance
