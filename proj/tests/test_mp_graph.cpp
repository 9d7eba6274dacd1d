#include "doctest.h"

#include "attnet/mp_graph.hpp"
#include "attnet/rng.hpp"

using namespace attnet;

namespace {

MemberRecord member(const std::string& id, std::optional<std::string> university = {},
                    std::optional<std::string> subject = {},
                    std::optional<std::string> occupation = {},
                    Military military = Military::unknown) {
    MemberRecord rec;
    rec.member_id = id;
    rec.year = 1960;
    rec.party = "ALP";
    rec.university = std::move(university);
    rec.subject = std::move(subject);
    rec.occupation = std::move(occupation);
    rec.military = military;
    return rec;
}

}  // namespace

TEST_CASE("pair weight sums one over holder count per shared attribute") {
    auto slice = make_cohort_slice(
        "ALP", 1960,
        {member("a", "u1", {}, "law"), member("b", "u1", {}, "law"),
         member("c", "u1"), member("d", "u1")});
    // university u1 held by 4, occupation law by 2.
    CHECK(pair_weight("c", "d", slice) == 0.25);
    CHECK(pair_weight("a", "b", slice) == 0.75);
    CHECK(pair_weight("a", "b", slice) == pair_weight("b", "a", slice));
}

TEST_CASE("pair weight is zero without shared attributes and rejects bad arguments") {
    auto slice = make_cohort_slice("ALP", 1960, {member("a", "u1"), member("b", "u2")});
    CHECK(pair_weight("a", "b", slice) == 0.0);
    CHECK_THROWS_AS(pair_weight("a", "a", slice), std::invalid_argument);
    CHECK_THROWS_AS(pair_weight("a", "zz", slice), std::invalid_argument);
}

TEST_CASE("military no and UNKNOWN never produce weight") {
    auto slice = make_cohort_slice(
        "ALP", 1960,
        {member("a", {}, {}, {}, Military::no), member("b", {}, {}, {}, Military::no),
         member("c", {}, "x"), member("d")});
    CHECK(pair_weight("a", "b", slice) == 0.0);
    CHECK(pair_weight("c", "d", slice) == 0.0);
    auto mp = build_mp_graph(slice);
    CHECK(mp.graph.node_count() == 4);
    CHECK(mp.graph.edge_count() == 0);
}

TEST_CASE("one shared attribute of size three gives a 1/3 triangle") {
    auto slice = make_cohort_slice(
        "ALP", 1960,
        {member("a", {}, {}, "m"), member("b", {}, {}, "m"), member("c", {}, {}, "m")});
    auto mp = build_mp_graph(slice);
    CHECK(mp.graph.edge_count() == 3);
    for (const auto& [u, v, w] : mp.graph.edges())
        CHECK(w == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(mp.attribute_sizes.at("occupation:m") == 3);
}

TEST_CASE("graph edges agree with pair_weight everywhere") {
    SplitMix64 rng(61);
    const std::vector<std::string> labels = {"x", "y", "z"};
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<MemberRecord> members;
        const int n = 2 + static_cast<int>(rng.below(6));
        for (int i = 0; i < n; ++i) {
            auto draw = [&]() -> std::optional<std::string> {
                if (rng.below(3) == 0) return std::nullopt;
                return labels[rng.below(labels.size())];
            };
            auto rec = member("m" + std::to_string(i), draw(), draw(), draw(),
                              static_cast<Military>(rng.below(3)));
            members.push_back(std::move(rec));
        }
        auto slice = make_cohort_slice("ALP", 1960, std::move(members));
        auto mp = build_mp_graph(slice);
        for (int i = 0; i < mp.graph.node_count(); ++i) {
            for (int j = i + 1; j < mp.graph.node_count(); ++j) {
                double expected =
                    pair_weight(mp.graph.node_id(i), mp.graph.node_id(j), slice);
                CHECK(mp.graph.weight_idx(i, j) == doctest::Approx(expected).epsilon(1e-12));
                if (expected == 0.0) CHECK(!mp.graph.has_edge_idx(i, j));
            }
        }
    }
}

TEST_CASE("an attribute with g holders contributes (g-1)/2 total weight") {
    for (int g = 2; g <= 6; ++g) {
        std::vector<MemberRecord> members;
        for (int i = 0; i < g; ++i) members.push_back(member("m" + std::to_string(i), "u"));
        auto mp = build_mp_graph(make_cohort_slice("ALP", 1960, std::move(members)));
        double total = 0.0;
        for (const auto& [u, v, w] : mp.graph.edges()) total += w;
        CHECK(total == doctest::Approx((g - 1) / 2.0).epsilon(1e-12));
    }
}

TEST_CASE("a member with a fresh attribute joins as an isolated node") {
    auto base = make_cohort_slice("ALP", 1960, {member("a", "u"), member("b", "u")});
    auto extended = make_cohort_slice(
        "ALP", 1960, {member("a", "u"), member("b", "u"), member("c", "v")});
    auto mp_base = build_mp_graph(base);
    auto mp_ext = build_mp_graph(extended);
    CHECK(mp_ext.graph.node_count() == 3);
    CHECK(mp_ext.graph.edge_count() == mp_base.graph.edge_count());
    CHECK(mp_ext.graph.weight_idx(0, 1) == mp_base.graph.weight_idx(0, 1));
}

TEST_CASE("a single member slice is one isolated node") {
    auto mp = build_mp_graph(make_cohort_slice("ALP", 1960, {member("a", "u")}));
    CHECK(mp.graph.node_count() == 1);
    CHECK(mp.graph.edge_count() == 0);
    CHECK(mp.member_attributes.at("a") == std::vector<std::string>{"university:u"});
}

TEST_CASE("growing a holder set weakly decreases existing contributions") {
    // "a" and "b" share u; adding more u holders dilutes their edge.
    double previous = 1.0;
    for (int extra = 0; extra <= 4; ++extra) {
        std::vector<MemberRecord> members = {member("a", "u"), member("b", "u")};
        for (int i = 0; i < extra; ++i) members.push_back(member("x" + std::to_string(i), "u"));
        auto slice = make_cohort_slice("ALP", 1960, std::move(members));
        double w = pair_weight("a", "b", slice);
        CHECK(w <= previous);
        previous = w;
    }
}
