#pragma once

#include <string>
#include <vector>

#include "attnet/graph.hpp"

namespace attnet {

// Two complete sides of n and m nodes joined through one center adjacent
// to every node of both sides; no cross-side edges. Unit weights.
WeightedGraph make_bouquet(int n, int m);

// Complete core of core_n nodes plus k isolated satellites. Unit weights.
WeightedGraph make_satellite(int core_n, int k);

struct MotifReport {
    bool detected = false;
    std::vector<std::string> cut_nodes;    // sorted by id
    std::vector<int> component_sizes;      // after cut removal, descending
    std::vector<double> side_densities;    // aligned with component_sizes
    std::string notes;
};

struct BouquetThresholds {
    int min_side = 4;
    double min_density = 0.6;
    int max_cut = 2;
};

// Searches vertex cuts of the skeleton, articulation points first, then
// larger separators up to max_cut. Detected iff some cut leaves at least
// two components with >= min_side nodes and density >= min_density each;
// the smallest such cut is reported, ties broken by node-id order.
MotifReport detect_bouquet(const WeightedGraph& g, const BouquetThresholds& thresholds = {});

// Detected iff the largest component has >= min_core nodes and at least
// min_sats components have <= 2 nodes.
MotifReport detect_satellite(const WeightedGraph& g, int min_core = 4, int min_sats = 3);

// Articulation points of the skeleton, sorted by node id.
std::vector<std::string> articulation_points(const WeightedGraph& g);

// Closed-form relative change in average maximal flow when one of two
// overlapping hyperedges is resized from B to r*B at fixed overlap r'*B,
// for the undirected (Jaccard-weight) and directed projection schemes.
double asym_relative_diff(double r, double r_prime, Directedness scheme);

// Closed-form before/after ratio of average maximal flow for a
// two-hyperedge system when the overlap changes from n to n_prime.
double overlap_change_ratio(int big_a, int big_b, int n, int n_prime, Directedness scheme);

}  // namespace attnet
