#pragma once

#include <array>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace attnet {

enum class AttributeKind { university, subject, occupation, military };

inline constexpr std::array<AttributeKind, 4> kAttributeKinds = {
    AttributeKind::university, AttributeKind::subject,
    AttributeKind::occupation, AttributeKind::military};

std::string_view kind_name(AttributeKind kind);
std::optional<AttributeKind> kind_from_name(std::string_view name);

enum class Military { yes, no, unknown };

// One legislator-year row. Unset optionals are the UNKNOWN marker.
struct MemberRecord {
    std::string member_id;
    int year = 0;
    std::string party;
    std::optional<std::string> university;
    std::optional<std::string> subject;
    std::optional<std::string> occupation;
    Military military = Military::unknown;

    bool operator==(const MemberRecord&) const = default;
};

// Raw categorical value for one kind; military reads as "yes"/"no".
std::optional<std::string> attribute_value(const MemberRecord& rec, AttributeKind kind);

// Value that counts as a shared background tie. Differs from
// attribute_value only for military, where "no" carries no tie.
std::optional<std::string> shared_attribute_label(const MemberRecord& rec, AttributeKind kind);

struct ParseSchema {
    char delimiter = ',';
    std::string unknown_sentinel = "UNKNOWN";  // empty cells also parse as UNKNOWN
    int year_min = 1947;
    int year_max = 2019;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, std::string column);

    int line() const { return line_; }
    const std::string& column() const { return column_; }

private:
    int line_;
    std::string column_;
};

// Parses a delimiter-separated stream with a header row naming the seven
// fields (member_id, year, party, university, subject, occupation,
// military) in any order. Row order is preserved.
std::vector<MemberRecord> parse_members(std::istream& in, const ParseSchema& schema = {});

// Inverse of parse_members on valid record sets; UNKNOWN serializes as an
// empty cell.
std::string serialize_members(const std::vector<MemberRecord>& records,
                              const ParseSchema& schema = {});

// One (party, year) cohort of the panel.
struct CohortSlice {
    std::string party;
    int year = 0;
    std::vector<MemberRecord> members;
    // Non-UNKNOWN labels present per kind. For slices coming out of
    // slice_panel this is exactly the set appearing in members; null-model
    // samples may carry the parent slice's larger pool.
    std::map<AttributeKind, std::set<std::string>> categories;
    std::map<AttributeKind, int> unknown_counts;
};

// Builds a slice from members that must all share (party, year); computes
// categories and unknown_counts.
CohortSlice make_cohort_slice(std::string party, int year, std::vector<MemberRecord> members);

// Filters records down to one (party, year) cohort; empty result is valid.
CohortSlice slice_panel(const std::vector<MemberRecord>& records,
                        const std::string& party, int year);

// Distinct (party, year) pairs present, sorted.
std::vector<std::pair<std::string, int>> panel_slices(const std::vector<MemberRecord>& records);

}  // namespace attnet
