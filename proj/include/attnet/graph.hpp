#pragma once

#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace attnet {

enum class Directedness { undirected, directed };

// Weighted graph over string node ids. Edge weights are strictly positive
// and double as flow capacities; absent pairs mean weight zero. Undirected
// edges are stored once under the (min, max) index key. No self-loops.
class WeightedGraph {
public:
    explicit WeightedGraph(Directedness d = Directedness::undirected) : directedness_(d) {}

    Directedness directedness() const { return directedness_; }
    bool directed() const { return directedness_ == Directedness::directed; }

    // Idempotent; returns the node's index.
    int add_node(const std::string& id);
    bool has_node(const std::string& id) const { return index_.count(id) > 0; }
    int index_of(const std::string& id) const;  // throws if absent
    const std::string& node_id(int index) const { return ids_.at(static_cast<std::size_t>(index)); }
    int node_count() const { return static_cast<int>(ids_.size()); }
    const std::vector<std::string>& node_ids() const { return ids_; }

    void add_edge(const std::string& u, const std::string& v, double weight);
    void add_edge_idx(int u, int v, double weight);
    bool has_edge_idx(int u, int v) const;
    double weight_idx(int u, int v) const;  // 0 when absent
    std::size_t edge_count() const { return weights_.size(); }

    // Deterministic (index-sorted) edge list; u < v for undirected edges.
    std::vector<std::tuple<int, int, double>> edges() const;

    // Out-neighbors with weights (all neighbors when undirected).
    const std::vector<std::pair<int, double>>& out_edges(int u) const {
        return adj_.at(static_cast<std::size_t>(u));
    }

    // Undirected, unweighted adjacency; directed edge pairs are collapsed.
    std::vector<std::vector<int>> skeleton_adjacency() const;

private:
    std::pair<int, int> edge_key(int u, int v) const;

    Directedness directedness_;
    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> index_;
    std::map<std::pair<int, int>, double> weights_;
    std::vector<std::vector<std::pair<int, double>>> adj_;
};

// Component id per node of the undirected skeleton, numbered by first
// appearance in node order.
std::vector<int> connected_components(const WeightedGraph& g);

std::vector<int> component_sizes(const std::vector<int>& component_ids);

}  // namespace attnet
