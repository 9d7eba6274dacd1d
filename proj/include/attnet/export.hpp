#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "attnet/graph.hpp"
#include "attnet/metrics.hpp"
#include "attnet/motifs.hpp"

namespace attnet {

// Optional per-node payload (e.g. a member's attribute ids) keyed by id.
using NodeAttributes = std::map<std::string, std::vector<std::string>>;

// {"directed": bool, "nodes": [{"id", "label", "attributes"?}], "edges":
// [{"source", "target", "weight", "directed"}]}. Node and edge order is
// deterministic, so equal graphs serialize byte-identically.
std::string graph_to_json(const WeightedGraph& g, const NodeAttributes& attributes = {});

// Inverse of graph_to_json; throws std::runtime_error on malformed input.
WeightedGraph graph_from_json(std::istream& in);
WeightedGraph graph_from_json_file(const std::string& path);

// DOT with every node listed (isolated ones included) and the weight as
// an edge attribute.
std::string graph_to_dot(const WeightedGraph& g);

std::string motif_report_to_json(const MotifReport& report);

// graph_id, metric, value rows; undefined metrics leave the value empty.
std::string metrics_to_csv(
    const std::string& graph_id,
    const std::vector<std::pair<std::string, std::optional<double>>>& metrics);

// Per-node centrality plus the optional per-pair flow list (quadratic in
// node count, hence split from the CSV summary).
std::string flow_details_to_json(const WeightedGraph& g, const FlowReport& report,
                                 const std::map<std::string, double>* centrality);

}  // namespace attnet
