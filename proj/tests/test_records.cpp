#include "doctest.h"

#include <sstream>

#include "attnet/records.hpp"
#include "attnet/rng.hpp"

using namespace attnet;

namespace {

std::vector<MemberRecord> parse_text(const std::string& text, const ParseSchema& schema = {}) {
    std::istringstream in(text);
    return parse_members(in, schema);
}

const std::string kHeader = "member_id,year,party,university,subject,occupation,military\n";

}  // namespace

TEST_CASE("parses a single well-formed row") {
    auto records = parse_text(kHeader + "m1,1960,ALP,melbourne,law,barrister,yes\n");
    REQUIRE(records.size() == 1);
    CHECK(records[0].member_id == "m1");
    CHECK(records[0].year == 1960);
    CHECK(records[0].party == "ALP");
    CHECK(records[0].university == "melbourne");
    CHECK(records[0].subject == "law");
    CHECK(records[0].occupation == "barrister");
    CHECK(records[0].military == Military::yes);
}

TEST_CASE("empty cells and the sentinel read as UNKNOWN") {
    auto records = parse_text(kHeader + "m1,1960,ALP,,UNKNOWN,barrister,\n");
    REQUIRE(records.size() == 1);
    CHECK(!records[0].university.has_value());
    CHECK(!records[0].subject.has_value());
    CHECK(records[0].military == Military::unknown);
}

TEST_CASE("header columns may come in any order") {
    auto records = parse_text(
        "year,member_id,military,party,occupation,subject,university\n"
        "1960,m1,no,LP,farmer,,\n");
    REQUIRE(records.size() == 1);
    CHECK(records[0].member_id == "m1");
    CHECK(records[0].party == "LP");
    CHECK(records[0].occupation == "farmer");
    CHECK(records[0].military == Military::no);
}

TEST_CASE("duplicate (member_id, year, party) is rejected") {
    const std::string text = kHeader +
                             "m1,1960,ALP,,,barrister,yes\n"
                             "m1,1960,ALP,,,farmer,no\n";
    CHECK_THROWS_AS(parse_text(text), ParseError);
    try {
        parse_text(text);
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("a row with the wrong field count names its line") {
    try {
        parse_text(kHeader + "m1,1960,ALP,melbourne\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("unparseable and out-of-range years name line and column") {
    try {
        parse_text(kHeader + "m1,next year,ALP,,,x,\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == "year");
    }
    CHECK_THROWS_AS(parse_text(kHeader + "m1,1873,ALP,,,x,\n"), ParseError);
    ParseSchema wide;
    wide.year_min = 1800;
    CHECK(parse_text(kHeader + "m1,1873,ALP,,,x,\n", wide).size() == 1);
}

TEST_CASE("bad military value and empty member_id are rejected") {
    CHECK_THROWS_AS(parse_text(kHeader + "m1,1960,ALP,,,x,maybe\n"), ParseError);
    CHECK_THROWS_AS(parse_text(kHeader + ",1960,ALP,,,x,yes\n"), ParseError);
}

TEST_CASE("missing and unexpected header columns are rejected") {
    CHECK_THROWS_AS(parse_text("member_id,year,party\nm1,1960,ALP\n"), ParseError);
    CHECK_THROWS_AS(parse_text(kHeader.substr(0, kHeader.size() - 1) + ",extra\n"), ParseError);
}

TEST_CASE("alternate delimiter is honoured") {
    ParseSchema schema;
    schema.delimiter = ';';
    std::istringstream in(
        "member_id;year;party;university;subject;occupation;military\n"
        "m1;1960;ALP;;;x;yes\n");
    auto records = parse_members(in, schema);
    REQUIRE(records.size() == 1);
    CHECK(records[0].occupation == "x");
}

TEST_CASE("serialize then parse is the identity on random record sets") {
    SplitMix64 rng(99);
    const std::vector<std::string> labels = {"a", "b", "c long label", "d,with delimiter"};
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<MemberRecord> records;
        const int count = static_cast<int>(rng.below(12));
        for (int i = 0; i < count; ++i) {
            MemberRecord rec;
            rec.member_id = "m" + std::to_string(i);
            rec.year = 1950 + static_cast<int>(rng.below(40));
            rec.party = rng.below(2) == 0 ? "ALP" : "LP";
            auto draw = [&]() -> std::optional<std::string> {
                if (rng.below(3) == 0) return std::nullopt;
                return labels[rng.below(labels.size())];
            };
            rec.university = draw();
            rec.subject = draw();
            rec.occupation = draw();
            rec.military = static_cast<Military>(rng.below(3));
            records.push_back(std::move(rec));
        }
        std::istringstream in(serialize_members(records));
        CHECK(parse_members(in) == records);
    }
}

TEST_CASE("slice_panel filters and fills categories and unknown counts") {
    std::vector<MemberRecord> records;
    for (int i = 0; i < 3; ++i) {
        MemberRecord rec;
        rec.member_id = "a" + std::to_string(i);
        rec.year = 1960;
        rec.party = "ALP";
        rec.occupation = "trade_unionist";
        if (i > 0) rec.university = "melbourne";
        records.push_back(rec);
    }
    for (int i = 0; i < 2; ++i) {
        MemberRecord rec;
        rec.member_id = "l" + std::to_string(i);
        rec.year = 1960;
        rec.party = "LP";
        records.push_back(rec);
    }

    auto slice = slice_panel(records, "ALP", 1960);
    CHECK(slice.members.size() == 3);
    CHECK(slice.categories.at(AttributeKind::occupation) ==
          std::set<std::string>{"trade_unionist"});
    CHECK(slice.unknown_counts.at(AttributeKind::university) == 1);
    CHECK(slice.unknown_counts.at(AttributeKind::military) == 3);
    CHECK(slice_panel(records, "ALP", 1900).members.empty());
}

TEST_CASE("slice counts over all (party, year) pairs partition the panel") {
    SplitMix64 rng(5);
    std::vector<MemberRecord> records;
    for (int i = 0; i < 40; ++i) {
        MemberRecord rec;
        rec.member_id = "m" + std::to_string(i);
        rec.year = 1950 + static_cast<int>(rng.below(4));
        rec.party = rng.below(2) == 0 ? "ALP" : "LP";
        records.push_back(rec);
    }
    std::size_t total = 0;
    for (const auto& [party, year] : panel_slices(records))
        total += slice_panel(records, party, year).members.size();
    CHECK(total == records.size());
}

TEST_CASE("make_cohort_slice rejects mixed cohorts and duplicate ids") {
    MemberRecord a;
    a.member_id = "a";
    a.year = 1960;
    a.party = "ALP";
    MemberRecord b = a;
    b.member_id = "b";
    b.year = 1961;
    CHECK_THROWS_AS(make_cohort_slice("ALP", 1960, {a, b}), std::invalid_argument);
    CHECK_THROWS_AS(make_cohort_slice("ALP", 1960, {a, a}), std::invalid_argument);
}

TEST_CASE("military no is a value but never a shared label") {
    MemberRecord rec;
    rec.military = Military::no;
    CHECK(attribute_value(rec, AttributeKind::military) == "no");
    CHECK(!shared_attribute_label(rec, AttributeKind::military).has_value());
    rec.military = Military::yes;
    CHECK(shared_attribute_label(rec, AttributeKind::military) == "yes");
}
