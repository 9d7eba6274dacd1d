#include "attnet/export.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "attnet/csv.hpp"
#include "attnet/format.hpp"

namespace attnet {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

std::string graph_to_json(const WeightedGraph& g, const NodeAttributes& attributes) {
    ordered_json root;
    root["directed"] = g.directed();
    root["nodes"] = ordered_json::array();
    for (const std::string& id : g.node_ids()) {
        ordered_json node;
        node["id"] = id;
        node["label"] = id;
        auto found = attributes.find(id);
        if (found != attributes.end()) node["attributes"] = found->second;
        root["nodes"].push_back(std::move(node));
    }
    root["edges"] = ordered_json::array();
    for (const auto& [u, v, weight] : g.edges()) {
        ordered_json edge;
        edge["source"] = g.node_id(u);
        edge["target"] = g.node_id(v);
        edge["weight"] = weight;
        edge["directed"] = g.directed();
        root["edges"].push_back(std::move(edge));
    }
    return root.dump(2) + "\n";
}

WeightedGraph graph_from_json(std::istream& in) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::runtime_error(std::string("graph file is not valid JSON: ") + err.what());
    }
    if (!root.is_object() || !root.contains("directed") || !root.contains("nodes") ||
        !root.contains("edges"))
        throw std::runtime_error("graph JSON needs directed, nodes and edges fields");
    WeightedGraph g(root.at("directed").get<bool>() ? Directedness::directed
                                                    : Directedness::undirected);
    for (const auto& node : root.at("nodes")) {
        if (!node.contains("id") || !node.at("id").is_string())
            throw std::runtime_error("every node needs a string id");
        g.add_node(node.at("id").get<std::string>());
    }
    for (const auto& edge : root.at("edges")) {
        if (!edge.contains("source") || !edge.contains("target") || !edge.contains("weight"))
            throw std::runtime_error("every edge needs source, target and weight");
        g.add_edge(edge.at("source").get<std::string>(), edge.at("target").get<std::string>(),
                   edge.at("weight").get<double>());
    }
    return g;
}

WeightedGraph graph_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return graph_from_json(in);
}

namespace {

// DOT identifiers are always quoted; only quotes and backslashes need
// escaping then.
std::string dot_quote(const std::string& id) {
    std::string out = "\"";
    for (char c : id) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string graph_to_dot(const WeightedGraph& g) {
    const bool directed = g.directed();
    std::string out = directed ? "digraph attnet {\n" : "graph attnet {\n";
    for (const std::string& id : g.node_ids()) {
        out += "  " + dot_quote(id) + ";\n";
    }
    const char* arrow = directed ? " -> " : " -- ";
    for (const auto& [u, v, weight] : g.edges()) {
        out += "  " + dot_quote(g.node_id(u)) + arrow + dot_quote(g.node_id(v)) +
               " [weight=" + format_double(weight) + "];\n";
    }
    out += "}\n";
    return out;
}

std::string motif_report_to_json(const MotifReport& report) {
    ordered_json root;
    root["detected"] = report.detected;
    root["cut_nodes"] = report.cut_nodes;
    root["component_sizes"] = report.component_sizes;
    root["side_densities"] = report.side_densities;
    root["notes"] = report.notes;
    return root.dump(2) + "\n";
}

std::string metrics_to_csv(
    const std::string& graph_id,
    const std::vector<std::pair<std::string, std::optional<double>>>& metrics) {
    std::string out = "graph_id,metric,value\n";
    for (const auto& [metric, value] : metrics) {
        out += csv::join_row({graph_id, metric, value ? format_double(*value) : std::string()},
                             ',');
        out += '\n';
    }
    return out;
}

std::string flow_details_to_json(const WeightedGraph& g, const FlowReport& report,
                                 const std::map<std::string, double>* centrality) {
    ordered_json root;
    root["average_maximal_flow"] = report.average;
    root["pair_count"] = report.pair_count;
    root["pairs"] = ordered_json::array();
    for (const auto& [i, j, flow] : report.pair_flows) {
        ordered_json pair;
        pair["source"] = g.node_id(i);
        pair["target"] = g.node_id(j);
        pair["flow"] = flow;
        root["pairs"].push_back(std::move(pair));
    }
    if (centrality != nullptr) {
        ordered_json scores = ordered_json::object();
        for (const auto& [id, score] : *centrality) scores[id] = score;
        root["betweenness"] = std::move(scores);
    }
    return root.dump(2) + "\n";
}

}  // namespace attnet
