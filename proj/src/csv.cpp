#include "attnet/csv.hpp"

#include <stdexcept>

namespace attnet::csv {

std::vector<std::string> split_fields(const std::string& raw, int line, char delimiter) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    std::size_t i = 0;
    while (i < raw.size()) {
        char c = raw[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < raw.size() && raw[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"' && current.empty()) {
            quoted = true;
        } else if (c == delimiter) {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
        ++i;
    }
    if (quoted) {
        throw std::runtime_error("line " + std::to_string(line) + ": unterminated quote");
    }
    fields.push_back(std::move(current));
    return fields;
}

std::optional<Row> read_row(std::istream& in, int& line, char delimiter) {
    std::string raw;
    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty()) continue;
        return Row{split_fields(raw, line, delimiter), line};
    }
    return std::nullopt;
}

std::string escape_field(const std::string& field, char delimiter) {
    bool needs_quotes = false;
    for (char c : field) {
        if (c == delimiter || c == '"' || c == '\n' || c == '\r') {
            needs_quotes = true;
            break;
        }
    }
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string join_row(const std::vector<std::string>& fields, char delimiter) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out.push_back(delimiter);
        out += escape_field(fields[i], delimiter);
    }
    return out;
}

}  // namespace attnet::csv
