#pragma once

#include <map>
#include <string>
#include <vector>

#include "attnet/graph.hpp"
#include "attnet/records.hpp"

namespace attnet {

// MP network of one cohort: members as nodes, an undirected edge per pair
// with shared background, weighted by the sum over shared attributes of
// 1 / (holder count of that attribute).
struct MpGraph {
    WeightedGraph graph;
    // "kind:label" -> holder count; the denominators behind every weight.
    std::map<std::string, int> attribute_sizes;
    // member_id -> its attribute ids, for export payloads.
    std::map<std::string, std::vector<std::string>> member_attributes;
};

// Holder counts per shared attribute present in the slice.
std::map<std::string, int> attribute_sizes(const CohortSlice& slice);

// Sum over shared attributes of 1 / holder count; zero when nothing is
// shared. Throws when i == j or either id is not in the slice.
double pair_weight(const std::string& i, const std::string& j, const CohortSlice& slice);

MpGraph build_mp_graph(const CohortSlice& slice);

}  // namespace attnet
