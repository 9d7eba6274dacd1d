#include "attnet/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace attnet {

int WeightedGraph::add_node(const std::string& id) {
    auto it = index_.find(id);
    if (it != index_.end()) return it->second;
    int idx = static_cast<int>(ids_.size());
    ids_.push_back(id);
    index_.emplace(id, idx);
    adj_.emplace_back();
    return idx;
}

int WeightedGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw std::invalid_argument("unknown node '" + id + "'");
    return it->second;
}

std::pair<int, int> WeightedGraph::edge_key(int u, int v) const {
    if (directed()) return {u, v};
    return {std::min(u, v), std::max(u, v)};
}

void WeightedGraph::add_edge_idx(int u, int v, double weight) {
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (u < 0 || v < 0 || u >= node_count() || v >= node_count())
        throw std::invalid_argument("edge endpoint out of range");
    if (!(weight > 0.0)) throw std::invalid_argument("edge weights must be positive");
    auto [inserted, fresh] = weights_.emplace(edge_key(u, v), weight);
    if (!fresh) throw std::invalid_argument("duplicate edge");
    adj_[static_cast<std::size_t>(u)].emplace_back(v, weight);
    if (!directed()) adj_[static_cast<std::size_t>(v)].emplace_back(u, weight);
}

void WeightedGraph::add_edge(const std::string& u, const std::string& v, double weight) {
    add_edge_idx(index_of(u), index_of(v), weight);
}

bool WeightedGraph::has_edge_idx(int u, int v) const {
    return weights_.count(edge_key(u, v)) > 0;
}

double WeightedGraph::weight_idx(int u, int v) const {
    auto it = weights_.find(edge_key(u, v));
    return it == weights_.end() ? 0.0 : it->second;
}

std::vector<std::tuple<int, int, double>> WeightedGraph::edges() const {
    std::vector<std::tuple<int, int, double>> out;
    out.reserve(weights_.size());
    for (const auto& [key, w] : weights_) out.emplace_back(key.first, key.second, w);
    return out;
}

std::vector<std::vector<int>> WeightedGraph::skeleton_adjacency() const {
    std::vector<std::vector<int>> adj(ids_.size());
    for (const auto& [key, w] : weights_) {
        auto [u, v] = key;
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& neighbors : adj) {
        std::sort(neighbors.begin(), neighbors.end());
        neighbors.erase(std::unique(neighbors.begin(), neighbors.end()), neighbors.end());
    }
    return adj;
}

std::vector<int> connected_components(const WeightedGraph& g) {
    auto adj = g.skeleton_adjacency();
    std::vector<int> comp(adj.size(), -1);
    int next = 0;
    std::vector<int> stack;
    for (std::size_t start = 0; start < adj.size(); ++start) {
        if (comp[start] != -1) continue;
        comp[start] = next;
        stack.push_back(static_cast<int>(start));
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[static_cast<std::size_t>(u)]) {
                if (comp[static_cast<std::size_t>(v)] == -1) {
                    comp[static_cast<std::size_t>(v)] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return comp;
}

std::vector<int> component_sizes(const std::vector<int>& component_ids) {
    std::vector<int> sizes;
    for (int c : component_ids) {
        if (c >= static_cast<int>(sizes.size())) sizes.resize(static_cast<std::size_t>(c) + 1, 0);
        ++sizes[static_cast<std::size_t>(c)];
    }
    return sizes;
}

}  // namespace attnet
