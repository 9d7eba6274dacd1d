#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "attnet/graph.hpp"

namespace attnet {

struct FlowReport {
    std::vector<std::tuple<int, int, double>> pair_flows;  // ordered pairs (i, j, F)
    double average = 0.0;
    std::size_t pair_count = 0;
};

// Maximum src->dst flow with edge weights as capacities; undirected edges
// carry their capacity in both directions. Disconnected pairs yield 0;
// src == dst throws.
double max_flow(const WeightedGraph& g, const std::string& src, const std::string& dst);

// Mean of pairwise max flow over all ordered pairs, isolated nodes
// included in the pair universe. Requires at least two nodes.
double average_maximal_flow(const WeightedGraph& g);

FlowReport all_pairs_max_flow(const WeightedGraph& g);

// 3 * triangles / connected triples on the undirected unweighted skeleton;
// 0 when no connected triples exist.
double transitivity(const WeightedGraph& g);

// Brandes betweenness centrality over unordered pairs, unnormalised,
// endpoints excluded; path lengths are 1 / weight. Undirected graphs only.
std::map<std::string, double> betweenness(const WeightedGraph& g);

struct Moments {
    std::optional<double> mean;
    std::optional<double> stddev;
    std::optional<double> skewness;
    std::optional<double> kurtosis;
};

// Sample mean and (n-1)-denominator standard deviation for n >= 2;
// skewness m3 / m2^(3/2) and kurtosis m4 / m2^2 (central 1/n moments) for
// n >= 3 with nonzero variance, else left unset. excess_kurtosis
// subtracts 3.
Moments distribution_moments(std::span<const double> values, bool excess_kurtosis = false);

// Skeleton degree of every node, in node order.
std::vector<double> degree_values(const WeightedGraph& g);

// Reusable max-flow solver; builds the residual structure once and resets
// capacities per query.
class FlowSolver {
public:
    explicit FlowSolver(const WeightedGraph& g);

    // Max flow between node indices; src == dst throws.
    double solve(int src, int dst);

private:
    struct Arc {
        int to;
        double cap;
        int rev;  // index of the reverse arc in arcs_[to]
    };

    bool bfs_levels(int src, int dst);
    double push(int u, int dst, double limit);

    std::vector<std::vector<Arc>> arcs_;
    std::vector<double> initial_caps_;  // flattened, for resets
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
};

}  // namespace attnet
