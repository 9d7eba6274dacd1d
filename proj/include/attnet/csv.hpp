#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace attnet::csv {

struct Row {
    std::vector<std::string> fields;
    int line = 0;  // 1-based physical line number
};

// Reads the next non-empty row. Fields may be wrapped in double quotes with
// "" escaping a literal quote; embedded newlines are not supported.
std::optional<Row> read_row(std::istream& in, int& line, char delimiter);

// Splits one raw line into fields, throwing on unterminated quotes.
std::vector<std::string> split_fields(const std::string& raw, int line, char delimiter);

// Quotes a field only when it contains the delimiter, a quote or whitespace
// at the edges.
std::string escape_field(const std::string& field, char delimiter);

std::string join_row(const std::vector<std::string>& fields, char delimiter);

}  // namespace attnet::csv
