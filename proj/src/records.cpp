#include "attnet/records.hpp"

#include <algorithm>
#include <charconv>
#include <tuple>

#include "attnet/csv.hpp"

namespace attnet {

namespace {

constexpr std::array<std::string_view, 7> kColumns = {
    "member_id", "year", "party", "university", "subject", "occupation", "military"};

}  // namespace

std::string_view kind_name(AttributeKind kind) {
    switch (kind) {
        case AttributeKind::university: return "university";
        case AttributeKind::subject: return "subject";
        case AttributeKind::occupation: return "occupation";
        case AttributeKind::military: return "military";
    }
    return "";
}

std::optional<AttributeKind> kind_from_name(std::string_view name) {
    for (AttributeKind kind : kAttributeKinds) {
        if (kind_name(kind) == name) return kind;
    }
    return std::nullopt;
}

std::optional<std::string> attribute_value(const MemberRecord& rec, AttributeKind kind) {
    switch (kind) {
        case AttributeKind::university: return rec.university;
        case AttributeKind::subject: return rec.subject;
        case AttributeKind::occupation: return rec.occupation;
        case AttributeKind::military:
            switch (rec.military) {
                case Military::yes: return "yes";
                case Military::no: return "no";
                case Military::unknown: return std::nullopt;
            }
    }
    return std::nullopt;
}

std::optional<std::string> shared_attribute_label(const MemberRecord& rec, AttributeKind kind) {
    if (kind == AttributeKind::military) {
        return rec.military == Military::yes ? std::optional<std::string>("yes") : std::nullopt;
    }
    return attribute_value(rec, kind);
}

ParseError::ParseError(const std::string& message, int line, std::string column)
    : std::runtime_error("line " + std::to_string(line) +
                         (column.empty() ? "" : ", column " + column) + ": " + message),
      line_(line),
      column_(std::move(column)) {}

namespace {

std::optional<std::string> parse_categorical(const std::string& cell, const ParseSchema& schema) {
    if (cell.empty() || cell == schema.unknown_sentinel) return std::nullopt;
    return cell;
}

}  // namespace

std::vector<MemberRecord> parse_members(std::istream& in, const ParseSchema& schema) {
    int line = 0;
    auto header = csv::read_row(in, line, schema.delimiter);
    if (!header) throw ParseError("empty input, header row required", 1, "");

    // Map each required column to its position; order is free.
    std::array<int, kColumns.size()> position;
    position.fill(-1);
    for (std::size_t i = 0; i < header->fields.size(); ++i) {
        const std::string& name = header->fields[i];
        auto it = std::find(kColumns.begin(), kColumns.end(), name);
        if (it == kColumns.end())
            throw ParseError("unexpected column '" + name + "'", header->line, name);
        auto idx = static_cast<std::size_t>(it - kColumns.begin());
        if (position[idx] != -1)
            throw ParseError("duplicate column '" + name + "'", header->line, name);
        position[idx] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
        if (position[i] == -1)
            throw ParseError("missing column '" + std::string(kColumns[i]) + "'",
                             header->line, std::string(kColumns[i]));
    }

    std::vector<MemberRecord> records;
    std::set<std::tuple<std::string, int, std::string>> seen;
    while (auto row = csv::read_row(in, line, schema.delimiter)) {
        if (row->fields.size() != header->fields.size())
            throw ParseError("expected " + std::to_string(header->fields.size()) +
                                 " fields, got " + std::to_string(row->fields.size()),
                             row->line, "");
        auto cell = [&](std::size_t column) -> const std::string& {
            return row->fields[static_cast<std::size_t>(position[column])];
        };

        MemberRecord rec;
        rec.member_id = cell(0);
        if (rec.member_id.empty())
            throw ParseError("member_id must be nonempty", row->line, "member_id");

        const std::string& year_cell = cell(1);
        auto result = std::from_chars(year_cell.data(), year_cell.data() + year_cell.size(),
                                      rec.year);
        if (result.ec != std::errc() || result.ptr != year_cell.data() + year_cell.size())
            throw ParseError("unparseable year '" + year_cell + "'", row->line, "year");
        if (rec.year < schema.year_min || rec.year > schema.year_max)
            throw ParseError("year " + year_cell + " outside configured range " +
                                 std::to_string(schema.year_min) + "-" +
                                 std::to_string(schema.year_max),
                             row->line, "year");

        rec.party = cell(2);
        if (rec.party.empty())
            throw ParseError("party must be nonempty", row->line, "party");

        rec.university = parse_categorical(cell(3), schema);
        rec.subject = parse_categorical(cell(4), schema);
        rec.occupation = parse_categorical(cell(5), schema);

        const std::string& mil = cell(6);
        if (mil.empty() || mil == schema.unknown_sentinel) rec.military = Military::unknown;
        else if (mil == "yes") rec.military = Military::yes;
        else if (mil == "no") rec.military = Military::no;
        else throw ParseError("military must be yes, no or empty, got '" + mil + "'",
                              row->line, "military");

        if (!seen.insert({rec.member_id, rec.year, rec.party}).second)
            throw ParseError("duplicate record for (" + rec.member_id + ", " +
                                 std::to_string(rec.year) + ", " + rec.party + ")",
                             row->line, "member_id");
        records.push_back(std::move(rec));
    }
    return records;
}

std::string serialize_members(const std::vector<MemberRecord>& records,
                              const ParseSchema& schema) {
    std::string out;
    std::vector<std::string> header(kColumns.begin(), kColumns.end());
    out += csv::join_row(header, schema.delimiter);
    out.push_back('\n');
    for (const MemberRecord& rec : records) {
        std::vector<std::string> fields = {
            rec.member_id,
            std::to_string(rec.year),
            rec.party,
            rec.university.value_or(""),
            rec.subject.value_or(""),
            rec.occupation.value_or(""),
            std::string(rec.military == Military::yes  ? "yes"
                        : rec.military == Military::no ? "no"
                                                       : ""),
        };
        out += csv::join_row(fields, schema.delimiter);
        out.push_back('\n');
    }
    return out;
}

CohortSlice make_cohort_slice(std::string party, int year, std::vector<MemberRecord> members) {
    CohortSlice slice;
    slice.party = std::move(party);
    slice.year = year;
    for (const MemberRecord& rec : members) {
        if (rec.party != slice.party || rec.year != slice.year)
            throw std::invalid_argument("member " + rec.member_id +
                                        " does not belong to slice (" + slice.party + ", " +
                                        std::to_string(slice.year) + ")");
    }
    std::set<std::string> ids;
    for (const MemberRecord& rec : members) {
        if (!ids.insert(rec.member_id).second)
            throw std::invalid_argument("duplicate member " + rec.member_id + " in slice");
    }
    slice.members = std::move(members);
    for (AttributeKind kind : kAttributeKinds) {
        slice.categories[kind] = {};
        slice.unknown_counts[kind] = 0;
        for (const MemberRecord& rec : slice.members) {
            if (auto value = attribute_value(rec, kind)) slice.categories[kind].insert(*value);
            else ++slice.unknown_counts[kind];
        }
    }
    return slice;
}

CohortSlice slice_panel(const std::vector<MemberRecord>& records,
                        const std::string& party, int year) {
    std::vector<MemberRecord> members;
    for (const MemberRecord& rec : records) {
        if (rec.party == party && rec.year == year) members.push_back(rec);
    }
    return make_cohort_slice(party, year, std::move(members));
}

std::vector<std::pair<std::string, int>> panel_slices(const std::vector<MemberRecord>& records) {
    std::set<std::pair<std::string, int>> keys;
    for (const MemberRecord& rec : records) keys.emplace(rec.party, rec.year);
    return {keys.begin(), keys.end()};
}

}  // namespace attnet
