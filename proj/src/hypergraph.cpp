#include "attnet/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace attnet {

AttributeHypergraph::AttributeHypergraph(std::vector<std::string> vertices,
                                         std::vector<Hyperedge> hyperedges)
    : vertices_(std::move(vertices)), hyperedges_(std::move(hyperedges)) {
    for (Hyperedge& edge : hyperedges_) {
        if (edge.members.empty())
            throw std::invalid_argument("hyperedge '" + edge.id + "' is empty");
        std::sort(edge.members.begin(), edge.members.end());
        edge.members.erase(std::unique(edge.members.begin(), edge.members.end()),
                           edge.members.end());
        if (edge.members.front() < 0 || edge.members.back() >= vertex_count())
            throw std::invalid_argument("hyperedge '" + edge.id + "' references unknown vertex");
    }
}

std::vector<std::vector<std::uint8_t>> AttributeHypergraph::incidence_matrix() const {
    std::vector<std::vector<std::uint8_t>> b(
        vertices_.size(), std::vector<std::uint8_t>(hyperedges_.size(), 0));
    for (std::size_t j = 0; j < hyperedges_.size(); ++j) {
        for (int v : hyperedges_[j].members) b[static_cast<std::size_t>(v)][j] = 1;
    }
    return b;
}

std::vector<int> AttributeHypergraph::vertex_degrees() const {
    std::vector<int> degree(vertices_.size(), 0);
    for (const Hyperedge& edge : hyperedges_) {
        for (int v : edge.members) ++degree[static_cast<std::size_t>(v)];
    }
    return degree;
}

AttributeHypergraph build_attribute_hypergraph(const CohortSlice& slice) {
    std::vector<std::string> vertices;
    vertices.reserve(slice.members.size());
    for (const MemberRecord& rec : slice.members) vertices.push_back(rec.member_id);

    std::vector<Hyperedge> hyperedges;
    for (AttributeKind kind : kAttributeKinds) {
        std::map<std::string, std::vector<int>> holders;  // label -> vertex indices
        for (std::size_t i = 0; i < slice.members.size(); ++i) {
            if (auto label = shared_attribute_label(slice.members[i], kind))
                holders[*label].push_back(static_cast<int>(i));
        }
        for (auto& [label, members] : holders) {
            hyperedges.push_back(
                {std::string(kind_name(kind)) + ":" + label, std::move(members)});
        }
    }
    return AttributeHypergraph(std::move(vertices), std::move(hyperedges));
}

AttributeHypergraph dual_hypergraph(const AttributeHypergraph& h) {
    std::vector<std::string> vertices;
    vertices.reserve(h.hyperedges().size());
    for (const Hyperedge& edge : h.hyperedges()) vertices.push_back(edge.id);

    std::vector<Hyperedge> hyperedges;
    for (int v = 0; v < h.vertex_count(); ++v) {
        std::vector<int> incident;
        for (std::size_t j = 0; j < h.hyperedges().size(); ++j) {
            const auto& members = h.hyperedges()[j].members;
            if (std::binary_search(members.begin(), members.end(), v))
                incident.push_back(static_cast<int>(j));
        }
        if (!incident.empty())
            hyperedges.push_back({h.vertices()[static_cast<std::size_t>(v)], std::move(incident)});
    }
    return AttributeHypergraph(std::move(vertices), std::move(hyperedges));
}

namespace {

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    auto it_a = a.begin();
    auto it_b = b.begin();
    while (it_a != a.end() && it_b != b.end()) {
        if (*it_a < *it_b) ++it_a;
        else if (*it_b < *it_a) ++it_b;
        else ++count, ++it_a, ++it_b;
    }
    return count;
}

}  // namespace

WeightedGraph sline_graph(const AttributeHypergraph& h, const SLineConfig& cfg) {
    if (cfg.s < 0) throw std::invalid_argument("filtration level s must be >= 0");
    const bool directed = cfg.scheme == SLineScheme::directed;
    WeightedGraph g(directed ? Directedness::directed : Directedness::undirected);
    for (const Hyperedge& edge : h.hyperedges()) g.add_node(edge.id);

    // Literal s=0 would join every pair; a tie still needs someone in the
    // overlap, so existence uses overlap >= max(s, 1).
    const int threshold = std::max(cfg.s, 1);
    const auto& edges = h.hyperedges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            int overlap = intersection_size(edges[i].members, edges[j].members);
            if (overlap < threshold) continue;
            const auto size_i = static_cast<double>(edges[i].members.size());
            const auto size_j = static_cast<double>(edges[j].members.size());
            switch (cfg.scheme) {
                case SLineScheme::uniform:
                    g.add_edge_idx(static_cast<int>(i), static_cast<int>(j), 1.0);
                    break;
                case SLineScheme::jaccard: {
                    double denom = cfg.jaccard_denominator == JaccardDenominator::set_union
                                       ? size_i + size_j - overlap
                                       : size_i + size_j;
                    g.add_edge_idx(static_cast<int>(i), static_cast<int>(j), overlap / denom);
                    break;
                }
                case SLineScheme::directed:
                    g.add_edge_idx(static_cast<int>(i), static_cast<int>(j), overlap / size_i);
                    g.add_edge_idx(static_cast<int>(j), static_cast<int>(i), overlap / size_j);
                    break;
            }
        }
    }
    return g;
}

}  // namespace attnet
