#include "attnet/motifs.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace attnet {

WeightedGraph make_bouquet(int n, int m) {
    if (n < 2 || m < 2) throw std::invalid_argument("bouquet sides need at least 2 nodes");
    WeightedGraph g;
    std::vector<int> left, right;
    for (int i = 0; i < n; ++i) left.push_back(g.add_node("a" + std::to_string(i)));
    for (int i = 0; i < m; ++i) right.push_back(g.add_node("b" + std::to_string(i)));
    int center = g.add_node("center");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge_idx(left[i], left[j], 1.0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) g.add_edge_idx(right[i], right[j], 1.0);
    for (int v : left) g.add_edge_idx(center, v, 1.0);
    for (int v : right) g.add_edge_idx(center, v, 1.0);
    return g;
}

WeightedGraph make_satellite(int core_n, int k) {
    if (core_n < 3) throw std::invalid_argument("satellite core needs at least 3 nodes");
    if (k < 0) throw std::invalid_argument("satellite count must be nonnegative");
    WeightedGraph g;
    std::vector<int> core;
    for (int i = 0; i < core_n; ++i) core.push_back(g.add_node("c" + std::to_string(i)));
    for (int i = 0; i < core_n; ++i)
        for (int j = i + 1; j < core_n; ++j) g.add_edge_idx(core[i], core[j], 1.0);
    for (int i = 0; i < k; ++i) g.add_node("s" + std::to_string(i));
    return g;
}

namespace {

// Components of the skeleton with `removed` masked out; returns sizes and
// member lists.
struct Split {
    std::vector<std::vector<int>> components;
};

Split components_without(const std::vector<std::vector<int>>& adj,
                         const std::vector<bool>& removed) {
    Split split;
    std::vector<int> comp(adj.size(), -1);
    std::vector<int> stack;
    for (std::size_t start = 0; start < adj.size(); ++start) {
        if (removed[start] || comp[start] != -1) continue;
        int id = static_cast<int>(split.components.size());
        split.components.emplace_back();
        comp[start] = id;
        stack.push_back(static_cast<int>(start));
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            split.components[static_cast<std::size_t>(id)].push_back(u);
            for (int v : adj[static_cast<std::size_t>(u)]) {
                auto sv = static_cast<std::size_t>(v);
                if (!removed[sv] && comp[sv] == -1) {
                    comp[sv] = id;
                    stack.push_back(v);
                }
            }
        }
    }
    return split;
}

// Skeleton density of an induced node set; <= 1 node counts as vacuously
// complete.
double induced_density(const std::vector<std::vector<int>>& adj, const std::vector<int>& nodes) {
    if (nodes.size() <= 1) return 1.0;
    std::vector<bool> in_set(adj.size(), false);
    for (int v : nodes) in_set[static_cast<std::size_t>(v)] = true;
    long long edges = 0;
    for (int v : nodes) {
        for (int u : adj[static_cast<std::size_t>(v)]) {
            if (u > v && in_set[static_cast<std::size_t>(u)]) ++edges;
        }
    }
    auto k = static_cast<long long>(nodes.size());
    return 2.0 * static_cast<double>(edges) / static_cast<double>(k * (k - 1));
}

}  // namespace

std::vector<std::string> articulation_points(const WeightedGraph& g) {
    auto adj = g.skeleton_adjacency();
    const auto n = adj.size();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<bool> is_cut(n, false);
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        auto su = static_cast<std::size_t>(u);
        disc[su] = low[su] = timer++;
        int children = 0;
        for (int v : adj[su]) {
            if (v == parent) continue;
            auto sv = static_cast<std::size_t>(v);
            if (disc[sv] == -1) {
                ++children;
                dfs(v, u);
                low[su] = std::min(low[su], low[sv]);
                if (parent != -1 && low[sv] >= disc[su]) is_cut[su] = true;
            } else {
                low[su] = std::min(low[su], disc[sv]);
            }
        }
        if (parent == -1 && children > 1) is_cut[su] = true;
    };
    for (std::size_t v = 0; v < n; ++v) {
        if (disc[v] == -1) dfs(static_cast<int>(v), -1);
    }

    std::vector<std::string> out;
    for (std::size_t v = 0; v < n; ++v) {
        if (is_cut[v]) out.push_back(g.node_id(static_cast<int>(v)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

MotifReport detect_bouquet(const WeightedGraph& g, const BouquetThresholds& thresholds) {
    if (g.directed()) throw std::invalid_argument("detect_bouquet requires an undirected graph");
    MotifReport report;
    const int n = g.node_count();
    auto adj = g.skeleton_adjacency();

    // Node order sorted by id so the first qualifying cut of each size is
    // the lexicographically smallest.
    std::vector<int> by_id(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) by_id[static_cast<std::size_t>(i)] = i;
    std::sort(by_id.begin(), by_id.end(),
              [&](int a, int b) { return g.node_id(a) < g.node_id(b); });

    auto evaluate = [&](const std::vector<int>& cut) -> bool {
        std::vector<bool> removed(static_cast<std::size_t>(n), false);
        for (int v : cut) removed[static_cast<std::size_t>(v)] = true;
        Split split = components_without(adj, removed);
        if (split.components.size() < 2) return false;
        int qualifying = 0;
        std::vector<std::pair<int, double>> sides;
        for (const auto& comp : split.components) {
            double density = induced_density(adj, comp);
            sides.emplace_back(static_cast<int>(comp.size()), density);
            if (static_cast<int>(comp.size()) >= thresholds.min_side &&
                density >= thresholds.min_density)
                ++qualifying;
        }
        if (qualifying < 2) return false;
        std::sort(sides.begin(), sides.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second > b.second;
        });
        report.detected = true;
        for (int v : cut) report.cut_nodes.push_back(g.node_id(v));
        std::sort(report.cut_nodes.begin(), report.cut_nodes.end());
        for (const auto& [size, density] : sides) {
            report.component_sizes.push_back(size);
            report.side_densities.push_back(density);
        }
        report.notes = "cut of " + std::to_string(cut.size()) + " separates " +
                       std::to_string(qualifying) + " dense sides";
        return true;
    };

    // Size-1 cuts are exactly the articulation points.
    for (const std::string& id : articulation_points(g)) {
        if (evaluate({g.index_of(id)})) return report;
    }

    // Larger separators: lexicographic subsets of the id-sorted order.
    std::vector<int> combo;
    std::function<bool(int, std::size_t)> search = [&](int remaining, std::size_t from) -> bool {
        if (remaining == 0) return evaluate(combo);
        for (std::size_t i = from; i + static_cast<std::size_t>(remaining) <= by_id.size(); ++i) {
            combo.push_back(by_id[i]);
            if (search(remaining - 1, i + 1)) return true;
            combo.pop_back();
        }
        return false;
    };
    for (int size = 2; size <= thresholds.max_cut; ++size) {
        combo.clear();
        if (search(size, 0)) return report;
    }
    report.notes = "no qualifying separator up to size " + std::to_string(thresholds.max_cut);
    return report;
}

MotifReport detect_satellite(const WeightedGraph& g, int min_core, int min_sats) {
    if (g.directed())
        throw std::invalid_argument("detect_satellite requires an undirected graph");
    MotifReport report;
    auto adj = g.skeleton_adjacency();
    Split split = components_without(adj, std::vector<bool>(adj.size(), false));

    int satellites = 0;
    std::vector<std::pair<int, double>> sides;
    for (const auto& comp : split.components) {
        sides.emplace_back(static_cast<int>(comp.size()), induced_density(adj, comp));
        if (comp.size() <= 2) ++satellites;
    }
    std::sort(sides.begin(), sides.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second > b.second;
    });
    for (const auto& [size, density] : sides) {
        report.component_sizes.push_back(size);
        report.side_densities.push_back(density);
    }
    int largest = sides.empty() ? 0 : sides.front().first;
    report.detected = largest >= min_core && satellites >= min_sats;
    report.notes = "largest component " + std::to_string(largest) + ", " +
                   std::to_string(satellites) + " satellite components";
    return report;
}

double asym_relative_diff(double r, double r_prime, Directedness scheme) {
    if (!(r > 0.0)) throw std::invalid_argument("size ratio r must be positive");
    if (!(r_prime > 0.0) || r_prime > r || r_prime > 1.0)
        throw std::invalid_argument("overlap ratio r' must satisfy 0 < r' <= min(r, 1)");
    if (scheme == Directedness::undirected) {
        if (r_prime >= 1.0)
            throw std::invalid_argument("undirected scheme requires r' < 1");
        return (1.0 - r) / (r + 1.0 - r_prime);
    }
    return (1.0 - r) / (2.0 * r);
}

double overlap_change_ratio(int big_a, int big_b, int n, int n_prime, Directedness scheme) {
    const int cap = std::min(big_a, big_b);
    if (big_a < 1 || big_b < 1 || n < 1 || n_prime < 1 || n > cap || n_prime > cap)
        throw std::invalid_argument("overlaps must satisfy 0 < n, n' <= min(A, B)");
    const double ratio = static_cast<double>(n) / static_cast<double>(n_prime);
    if (scheme == Directedness::directed) return ratio;
    return ratio * static_cast<double>(big_a + big_b - n_prime) /
           static_cast<double>(big_a + big_b - n);
}

}  // namespace attnet
