#include "doctest.h"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "attnet/hypergraph.hpp"
#include "attnet/metrics.hpp"
#include "attnet/motifs.hpp"
#include "attnet/records.hpp"
#include "attnet/rng.hpp"

using namespace attnet;

namespace {

// Two overlapping background circles realised as a cohort: occupation
// marks circle A, subject marks circle B, and the first `overlap` members
// carry both.
CohortSlice two_circle_slice(int size_a, int size_b, int overlap) {
    std::vector<MemberRecord> members;
    const int total = size_a + size_b - overlap;
    for (int i = 0; i < total; ++i) {
        MemberRecord rec;
        rec.member_id = "p" + std::to_string(i);
        rec.year = 1980;
        rec.party = "LIB";
        if (i < size_a) rec.occupation = "circle_a";
        if (i < overlap || i >= size_a) rec.subject = "circle_b";
        members.push_back(rec);
    }
    return make_cohort_slice("LIB", 1980, std::move(members));
}

double two_circle_amf(int size_a, int size_b, int overlap, SLineScheme scheme) {
    SLineConfig cfg;
    cfg.scheme = scheme;
    return average_maximal_flow(
        sline_graph(build_attribute_hypergraph(two_circle_slice(size_a, size_b, overlap)), cfg));
}

}  // namespace

TEST_CASE("bouquet generator produces two cliques through one center") {
    auto g = make_bouquet(3, 3);
    CHECK(g.node_count() == 7);
    CHECK(g.edge_count() == 12);  // 3 + 3 within the sides, 6 spokes
    CHECK(g.has_node("a0"));
    CHECK(g.has_node("b2"));
    CHECK(g.has_node("center"));
    CHECK(g.out_edges(g.index_of("center")).size() == 6);
    CHECK(!g.has_edge_idx(g.index_of("a0"), g.index_of("b0")));
    for (const auto& [u, v, w] : g.edges()) CHECK(w == 1.0);

    auto lopsided = make_bouquet(2, 5);
    CHECK(lopsided.node_count() == 8);
    CHECK(lopsided.edge_count() == 18);  // 1 + 10 within the sides, 7 spokes

    CHECK_THROWS_AS(make_bouquet(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_bouquet(4, 0), std::invalid_argument);
}

TEST_CASE("satellite generator produces a clique plus isolated nodes") {
    auto g = make_satellite(4, 3);
    CHECK(g.node_count() == 7);
    CHECK(g.edge_count() == 6);
    CHECK(g.has_node("c3"));
    CHECK(g.has_node("s2"));
    CHECK(g.out_edges(g.index_of("s0")).empty());

    auto bare = make_satellite(3, 0);
    CHECK(bare.node_count() == 3);
    CHECK(bare.edge_count() == 3);

    CHECK_THROWS_AS(make_satellite(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_satellite(5, -1), std::invalid_argument);
}

TEST_CASE("articulation points of standard shapes") {
    CHECK(articulation_points(make_bouquet(4, 6)) == std::vector<std::string>{"center"});

    WeightedGraph path;
    for (auto id : {"a", "b", "c"}) path.add_node(id);
    path.add_edge("a", "b", 1.0);
    path.add_edge("b", "c", 1.0);
    CHECK(articulation_points(path) == std::vector<std::string>{"b"});

    auto clique = make_satellite(5, 0);
    CHECK(articulation_points(clique).empty());

    // Two triangles joined by a bridge edge: both bridge endpoints cut.
    WeightedGraph bridged;
    for (auto id : {"p0", "p1", "p2", "q0", "q1", "q2"}) bridged.add_node(id);
    bridged.add_edge("p0", "p1", 1.0);
    bridged.add_edge("p1", "p2", 1.0);
    bridged.add_edge("p2", "p0", 1.0);
    bridged.add_edge("q0", "q1", 1.0);
    bridged.add_edge("q1", "q2", 1.0);
    bridged.add_edge("q2", "q0", 1.0);
    bridged.add_edge("p0", "q0", 1.0);
    CHECK(articulation_points(bridged) == std::vector<std::string>{"p0", "q0"});

    // Disconnected pieces are scanned independently.
    WeightedGraph two_parts;
    for (auto id : {"a", "b", "c", "x", "y"}) two_parts.add_node(id);
    two_parts.add_edge("a", "b", 1.0);
    two_parts.add_edge("b", "c", 1.0);
    two_parts.add_edge("x", "y", 1.0);
    CHECK(articulation_points(two_parts) == std::vector<std::string>{"b"});
}

TEST_CASE("bouquet detection finds the center cut") {
    BouquetThresholds tight;
    tight.min_side = 4;
    tight.min_density = 0.9;
    tight.max_cut = 1;
    auto report = detect_bouquet(make_bouquet(5, 5), tight);
    CHECK(report.detected);
    CHECK(report.cut_nodes == std::vector<std::string>{"center"});
    CHECK(report.component_sizes == std::vector<int>{5, 5});
    CHECK(report.side_densities == std::vector<double>{1.0, 1.0});
    CHECK(report.notes == "cut of 1 separates 2 dense sides");
}

TEST_CASE("bouquet detection succeeds across the invariant grid") {
    BouquetThresholds loose;
    loose.min_side = 3;
    for (int n = 3; n <= 12; ++n) {
        for (int m = 3; m <= 12; ++m) {
            auto report = detect_bouquet(make_bouquet(n, m), loose);
            CHECK(report.detected);
            CHECK(report.cut_nodes == std::vector<std::string>{"center"});
            CHECK(report.component_sizes ==
                  std::vector<int>{std::max(n, m), std::min(n, m)});
            if (n >= 4 && m >= 4) CHECK(detect_bouquet(make_bouquet(n, m)).detected);
        }
    }
}

TEST_CASE("complete graphs and thin sides are rejected") {
    for (int n = 4; n <= 12; ++n) {
        auto report = detect_bouquet(make_satellite(n, 0));
        CHECK(!report.detected);
        CHECK(report.cut_nodes.empty());
        CHECK(report.notes == "no qualifying separator up to size 2");
    }
    // One side below min_side cannot qualify under the defaults.
    CHECK(!detect_bouquet(make_bouquet(3, 5)).detected);

    WeightedGraph d(Directedness::directed);
    d.add_node("a");
    CHECK_THROWS_AS(detect_bouquet(d), std::invalid_argument);
}

TEST_CASE("two-node separators are searched after articulation points") {
    // Two K5 sides welded through the pair {x, y}; no articulation point
    // exists, so detection must reach the size-2 search.
    WeightedGraph g;
    std::vector<std::string> a_side, b_side;
    for (int i = 0; i < 5; ++i) {
        a_side.push_back("a" + std::to_string(i));
        b_side.push_back("b" + std::to_string(i));
        g.add_node(a_side.back());
        g.add_node(b_side.back());
    }
    g.add_node("x");
    g.add_node("y");
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            g.add_edge(a_side[i], a_side[j], 1.0);
            g.add_edge(b_side[i], b_side[j], 1.0);
        }
        for (auto hub : {"x", "y"}) {
            g.add_edge(hub, a_side[i], 1.0);
            g.add_edge(hub, b_side[i], 1.0);
        }
    }
    CHECK(articulation_points(g).empty());
    auto report = detect_bouquet(g);
    CHECK(report.detected);
    CHECK(report.cut_nodes == std::vector<std::string>{"x", "y"});
    CHECK(report.component_sizes == std::vector<int>{5, 5});

    BouquetThresholds shallow;
    shallow.max_cut = 1;
    CHECK(!detect_bouquet(g, shallow).detected);
}

TEST_CASE("satellite detection reads component structure") {
    auto report = detect_satellite(make_satellite(5, 4));
    CHECK(report.detected);
    CHECK(report.component_sizes == std::vector<int>{5, 1, 1, 1, 1});
    CHECK(report.side_densities == std::vector<double>{1.0, 1.0, 1.0, 1.0, 1.0});
    CHECK(report.cut_nodes.empty());
    CHECK(report.notes == "largest component 5, 4 satellite components");

    CHECK(!detect_satellite(make_satellite(5, 2)).detected);
    CHECK(!detect_satellite(make_satellite(3, 3)).detected);
    CHECK(detect_satellite(make_satellite(3, 3), 3).detected);

    // A two-node component counts as a satellite.
    auto g = make_satellite(4, 2);
    g.add_node("u");
    g.add_node("v");
    g.add_edge("u", "v", 1.0);
    auto paired = detect_satellite(g);
    CHECK(paired.detected);
    CHECK(paired.component_sizes == std::vector<int>{4, 2, 1, 1});

    WeightedGraph d(Directedness::directed);
    d.add_node("a");
    CHECK_THROWS_AS(detect_satellite(d), std::invalid_argument);
}

TEST_CASE("bouquet average flow matches the closed form") {
    // S(n, m) counts within-side, cross-side, and center pair flows.
    auto g = make_bouquet(3, 4);
    CHECK(average_maximal_flow(g) == doctest::Approx(94.0 / 28.0).epsilon(1e-12));
}

TEST_CASE("satellite average flow falls as satellites join") {
    double previous = average_maximal_flow(make_satellite(5, 0));
    CHECK(previous == 4.0);
    for (int k = 1; k <= 5; ++k) {
        double current = average_maximal_flow(make_satellite(5, k));
        CHECK(current < previous);
        previous = current;
    }
}

TEST_CASE("asymmetry law evaluates its frozen examples") {
    CHECK(asym_relative_diff(1.0, 0.5, Directedness::undirected) == 0.0);
    CHECK(asym_relative_diff(1.0, 1.0, Directedness::directed) == 0.0);
    CHECK(asym_relative_diff(0.5, 0.25, Directedness::undirected) ==
          doctest::Approx(0.4).epsilon(1e-12));
    CHECK(asym_relative_diff(0.5, 0.25, Directedness::directed) ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("asymmetry law is monotone with the advertised limits") {
    const double r_prime = 0.25;
    for (auto scheme : {Directedness::undirected, Directedness::directed}) {
        double previous = asym_relative_diff(0.25, r_prime, scheme);
        for (double r : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0}) {
            double current = asym_relative_diff(r, r_prime, scheme);
            CHECK(current < previous);
            previous = current;
        }
    }
    CHECK(asym_relative_diff(1e9, r_prime, Directedness::undirected) ==
          doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(asym_relative_diff(1e9, r_prime, Directedness::directed) ==
          doctest::Approx(-0.5).epsilon(1e-6));
}

TEST_CASE("asymmetry law rejects out-of-domain ratios") {
    CHECK_THROWS_AS(asym_relative_diff(0.0, 0.5, Directedness::directed), std::invalid_argument);
    CHECK_THROWS_AS(asym_relative_diff(2.0, 0.0, Directedness::directed), std::invalid_argument);
    CHECK_THROWS_AS(asym_relative_diff(0.5, 0.75, Directedness::directed), std::invalid_argument);
    CHECK_THROWS_AS(asym_relative_diff(3.0, 1.5, Directedness::directed), std::invalid_argument);
    CHECK_THROWS_AS(asym_relative_diff(2.0, 1.0, Directedness::undirected),
                    std::invalid_argument);
}

TEST_CASE("overlap change ratio evaluates its frozen examples") {
    CHECK(overlap_change_ratio(10, 10, 3, 3, Directedness::directed) == 1.0);
    CHECK(overlap_change_ratio(10, 10, 3, 3, Directedness::undirected) == 1.0);
    CHECK(overlap_change_ratio(10, 10, 2, 4, Directedness::directed) == 0.5);
    CHECK(overlap_change_ratio(10, 10, 2, 4, Directedness::undirected) ==
          doctest::Approx(4.0 / 9.0).epsilon(1e-12));

    CHECK_THROWS_AS(overlap_change_ratio(10, 10, 0, 4, Directedness::directed),
                    std::invalid_argument);
    CHECK_THROWS_AS(overlap_change_ratio(10, 4, 3, 5, Directedness::directed),
                    std::invalid_argument);
    CHECK_THROWS_AS(overlap_change_ratio(0, 10, 1, 1, Directedness::directed),
                    std::invalid_argument);
}

TEST_CASE("undirected ratios deviate further from parity than directed ones") {
    SplitMix64 rng(141);
    int compared = 0;
    while (compared < 50) {
        int big_a = 3 + static_cast<int>(rng.below(20));
        int big_b = 3 + static_cast<int>(rng.below(20));
        int cap = std::min(big_a, big_b);
        int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap)));
        int n_prime = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cap)));
        if (n == n_prime) continue;
        double und = overlap_change_ratio(big_a, big_b, n, n_prime, Directedness::undirected);
        double dir = overlap_change_ratio(big_a, big_b, n, n_prime, Directedness::directed);
        CHECK(std::abs(und - 1.0) > std::abs(dir - 1.0));
        ++compared;
    }
}

TEST_CASE("two-circle projections reproduce the closed forms") {
    for (auto [size_a, size_b, overlap] : {std::tuple{10, 10, 3}, {8, 14, 2}, {5, 7, 5}}) {
        const double expected_und =
            static_cast<double>(overlap) / static_cast<double>(size_a + size_b - overlap);
        const double expected_dir =
            (static_cast<double>(overlap) / size_a + static_cast<double>(overlap) / size_b) / 2.0;
        CHECK(two_circle_amf(size_a, size_b, overlap, SLineScheme::jaccard) ==
              doctest::Approx(expected_und).epsilon(1e-12));
        CHECK(two_circle_amf(size_a, size_b, overlap, SLineScheme::directed) ==
              doctest::Approx(expected_dir).epsilon(1e-12));
    }
}

TEST_CASE("resizing one circle in the pipeline matches the asymmetry law") {
    const int base = 16;
    const double r_prime = 0.25;
    const int overlap = 4;  // r' * base
    for (double r : {0.5, 0.75}) {
        const int resized = static_cast<int>(r * base);
        for (auto scheme : {SLineScheme::jaccard, SLineScheme::directed}) {
            const double before = two_circle_amf(base, base, overlap, scheme);
            const double after = two_circle_amf(resized, base, overlap, scheme);
            const double observed = (after - before) / before;
            const auto direction = scheme == SLineScheme::jaccard ? Directedness::undirected
                                                                  : Directedness::directed;
            CHECK(observed ==
                  doctest::Approx(asym_relative_diff(r, r_prime, direction)).epsilon(1e-12));
        }
    }
}

TEST_CASE("changing the overlap in the pipeline matches the ratio law") {
    const int size_a = 10;
    const int size_b = 12;
    for (auto [n, n_prime] : {std::pair{3, 6}, {6, 3}, {2, 9}}) {
        for (auto scheme : {SLineScheme::jaccard, SLineScheme::directed}) {
            const double before = two_circle_amf(size_a, size_b, n, scheme);
            const double after = two_circle_amf(size_a, size_b, n_prime, scheme);
            const auto direction = scheme == SLineScheme::jaccard ? Directedness::undirected
                                                                  : Directedness::directed;
            CHECK(before / after ==
                  doctest::Approx(overlap_change_ratio(size_a, size_b, n, n_prime, direction))
                      .epsilon(1e-12));
        }
    }
}
