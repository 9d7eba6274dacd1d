#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "attnet/graph.hpp"
#include "attnet/records.hpp"

namespace attnet {

struct Hyperedge {
    std::string id;            // "kind:label"
    std::vector<int> members;  // sorted vertex indices, nonempty
};

// Members as vertices, attribute values as hyperedges.
class AttributeHypergraph {
public:
    AttributeHypergraph() = default;
    AttributeHypergraph(std::vector<std::string> vertices, std::vector<Hyperedge> hyperedges);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Hyperedge>& hyperedges() const { return hyperedges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int hyperedge_count() const { return static_cast<int>(hyperedges_.size()); }

    // b_ij = 1 iff vertex i lies in hyperedge j.
    std::vector<std::vector<std::uint8_t>> incidence_matrix() const;

    // Number of hyperedges each vertex lies in.
    std::vector<int> vertex_degrees() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Hyperedge> hyperedges_;
};

// One hyperedge per (kind, label) with at least one holder; UNKNOWN values
// join nothing and military only forms the "yes" hyperedge. Hyperedges are
// ordered by kind (university, subject, occupation, military), then label.
AttributeHypergraph build_attribute_hypergraph(const CohortSlice& slice);

// Transpose incidence: vertices and hyperedges swap roles. Vertices of
// degree zero produce no dual hyperedge.
AttributeHypergraph dual_hypergraph(const AttributeHypergraph& h);

enum class SLineScheme { uniform, jaccard, directed };

enum class JaccardDenominator { set_union, size_sum };

struct SLineConfig {
    int s = 1;
    SLineScheme scheme = SLineScheme::uniform;
    // Variant switch: Jaccard weights normalised by |union| (default) or by
    // |e_i| + |e_j|.
    JaccardDenominator jaccard_denominator = JaccardDenominator::set_union;
};

// Flattens the hypergraph: nodes are hyperedges (isolated ones retained),
// an edge joins e_i, e_j iff their overlap has at least max(s, 1) members.
// uniform: weight 1. jaccard: |intersection| / |union|. directed: both
// ordered edges with w(i,j) = |intersection| / |e_i|.
WeightedGraph sline_graph(const AttributeHypergraph& h, const SLineConfig& cfg);

}  // namespace attnet
