#include "attnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace attnet {

namespace {

// Residual amounts below this are treated as exhausted; capacities are
// reals, so augmentation needs a positive floor to terminate.
constexpr double kFlowEps = 1e-12;

}  // namespace

FlowSolver::FlowSolver(const WeightedGraph& g) : arcs_(static_cast<std::size_t>(g.node_count())) {
    for (const auto& [u, v, w] : g.edges()) {
        auto su = static_cast<std::size_t>(u);
        auto sv = static_cast<std::size_t>(v);
        if (g.directed()) {
            // Forward arc plus zero-capacity reverse for residual flow.
            arcs_[su].push_back({v, w, static_cast<int>(arcs_[sv].size())});
            arcs_[sv].push_back({u, 0.0, static_cast<int>(arcs_[su].size()) - 1});
        } else {
            // Undirected edge: full capacity both ways, mutually residual.
            arcs_[su].push_back({v, w, static_cast<int>(arcs_[sv].size())});
            arcs_[sv].push_back({u, w, static_cast<int>(arcs_[su].size()) - 1});
        }
    }
    for (const auto& node_arcs : arcs_)
        for (const Arc& arc : node_arcs) initial_caps_.push_back(arc.cap);
    level_.resize(arcs_.size());
    iter_.resize(arcs_.size());
}

bool FlowSolver::bfs_levels(int src, int dst) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[static_cast<std::size_t>(src)] = 0;
    queue.push(src);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (const Arc& arc : arcs_[static_cast<std::size_t>(u)]) {
            if (arc.cap > kFlowEps && level_[static_cast<std::size_t>(arc.to)] == -1) {
                level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(u)] + 1;
                queue.push(arc.to);
            }
        }
    }
    return level_[static_cast<std::size_t>(dst)] != -1;
}

double FlowSolver::push(int u, int dst, double limit) {
    if (u == dst) return limit;
    auto su = static_cast<std::size_t>(u);
    for (std::size_t& i = iter_[su]; i < arcs_[su].size(); ++i) {
        Arc& arc = arcs_[su][i];
        if (arc.cap <= kFlowEps || level_[static_cast<std::size_t>(arc.to)] != level_[su] + 1)
            continue;
        double pushed = push(arc.to, dst, std::min(limit, arc.cap));
        if (pushed > 0.0) {
            arc.cap -= pushed;
            arcs_[static_cast<std::size_t>(arc.to)][static_cast<std::size_t>(arc.rev)].cap +=
                pushed;
            return pushed;
        }
    }
    return 0.0;
}

double FlowSolver::solve(int src, int dst) {
    if (src == dst) throw std::invalid_argument("max_flow requires distinct endpoints");
    // Reset capacities to the original graph.
    std::size_t k = 0;
    for (auto& node_arcs : arcs_)
        for (Arc& arc : node_arcs) arc.cap = initial_caps_[k++];

    // Shortest augmenting paths: BFS level graph, then blocking flow.
    double total = 0.0;
    while (bfs_levels(src, dst)) {
        std::fill(iter_.begin(), iter_.end(), 0);
        while (true) {
            double pushed = push(src, dst, std::numeric_limits<double>::infinity());
            if (pushed <= 0.0) break;
            total += pushed;
        }
    }
    return total;
}

double max_flow(const WeightedGraph& g, const std::string& src, const std::string& dst) {
    FlowSolver solver(g);
    return solver.solve(g.index_of(src), g.index_of(dst));
}

namespace {

// Shared by average_maximal_flow and all_pairs_max_flow: walks every
// ordered pair, skipping cross-component pairs (flow 0), and exploiting
// F(i,j) = F(j,i) on undirected graphs.
template <typename PairSink>
double ordered_pair_flow_sum(const WeightedGraph& g, PairSink&& sink) {
    const int n = g.node_count();
    FlowSolver solver(g);
    auto comp = connected_components(g);
    double sum = 0.0;
    if (g.directed()) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                double f = comp[static_cast<std::size_t>(i)] == comp[static_cast<std::size_t>(j)]
                               ? solver.solve(i, j)
                               : 0.0;
                sum += f;
                sink(i, j, f);
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                double f = comp[static_cast<std::size_t>(i)] == comp[static_cast<std::size_t>(j)]
                               ? solver.solve(i, j)
                               : 0.0;
                sum += 2.0 * f;
                sink(i, j, f);
                sink(j, i, f);
            }
        }
    }
    return sum;
}

}  // namespace

double average_maximal_flow(const WeightedGraph& g) {
    const int n = g.node_count();
    if (n < 2) throw std::invalid_argument("average_maximal_flow requires at least two nodes");
    double sum = ordered_pair_flow_sum(g, [](int, int, double) {});
    return sum / (static_cast<double>(n) * (n - 1));
}

FlowReport all_pairs_max_flow(const WeightedGraph& g) {
    const int n = g.node_count();
    if (n < 2) throw std::invalid_argument("all_pairs_max_flow requires at least two nodes");
    FlowReport report;
    report.pair_count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1);
    report.pair_flows.reserve(report.pair_count);
    double sum = ordered_pair_flow_sum(
        g, [&](int i, int j, double f) { report.pair_flows.emplace_back(i, j, f); });
    std::sort(report.pair_flows.begin(), report.pair_flows.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(std::get<0>(a), std::get<1>(a)) <
                         std::tie(std::get<0>(b), std::get<1>(b));
              });
    report.average = sum / static_cast<double>(report.pair_count);
    return report;
}

double transitivity(const WeightedGraph& g) {
    if (g.node_count() == 0) throw std::invalid_argument("transitivity requires a nonempty graph");
    auto adj = g.skeleton_adjacency();
    long long triangles = 0;  // counted once per triangle
    long long triples = 0;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        auto deg = static_cast<long long>(adj[v].size());
        triples += deg * (deg - 1) / 2;
        for (std::size_t a = 0; a < adj[v].size(); ++a) {
            int x = adj[v][a];
            if (x <= static_cast<int>(v)) continue;
            for (std::size_t b = a + 1; b < adj[v].size(); ++b) {
                int y = adj[v][b];
                if (y <= static_cast<int>(v)) continue;
                const auto& nx = adj[static_cast<std::size_t>(x)];
                if (std::binary_search(nx.begin(), nx.end(), y)) ++triangles;
            }
        }
    }
    if (triples == 0) return 0.0;
    return 3.0 * static_cast<double>(triangles) / static_cast<double>(triples);
}

std::map<std::string, double> betweenness(const WeightedGraph& g) {
    if (g.directed()) throw std::invalid_argument("betweenness requires an undirected graph");
    const auto n = static_cast<std::size_t>(g.node_count());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> score(n, 0.0);

    // Distances are sums of 1/weight; ties are matched with a small
    // relative tolerance so equal-length paths count into sigma.
    auto same_dist = [](double a, double b) {
        return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
    };

    std::vector<double> dist(n);
    std::vector<double> sigma(n);
    std::vector<double> delta(n);
    std::vector<std::vector<int>> preds(n);
    std::vector<int> order;
    order.reserve(n);
    std::vector<bool> settled(n);

    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), inf);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        std::fill(settled.begin(), settled.end(), false);
        for (auto& p : preds) p.clear();
        order.clear();

        dist[s] = 0.0;
        sigma[s] = 1.0;
        using Entry = std::pair<double, int>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
        queue.emplace(0.0, static_cast<int>(s));
        while (!queue.empty()) {
            auto [d, u] = queue.top();
            queue.pop();
            auto su = static_cast<std::size_t>(u);
            if (settled[su]) continue;
            settled[su] = true;
            order.push_back(u);
            for (const auto& [v, w] : g.out_edges(u)) {
                auto sv = static_cast<std::size_t>(v);
                if (settled[sv]) continue;
                double candidate = dist[su] + 1.0 / w;
                // The infinity guard keeps unreached nodes out of the
                // tolerance compare (any finite gap to infinity would pass
                // it) and makes their first relaxation unconditional.
                if (dist[sv] == inf ||
                    (candidate < dist[sv] && !same_dist(candidate, dist[sv]))) {
                    dist[sv] = candidate;
                    sigma[sv] = sigma[su];
                    preds[sv].assign(1, u);
                    queue.emplace(candidate, v);
                } else if (same_dist(candidate, dist[sv])) {
                    sigma[sv] += sigma[su];
                    preds[sv].push_back(u);
                }
            }
        }

        // Dependency accumulation in reverse settle order.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto sw = static_cast<std::size_t>(*it);
            for (int p : preds[sw]) {
                auto sp = static_cast<std::size_t>(p);
                delta[sp] += sigma[sp] / sigma[sw] * (1.0 + delta[sw]);
            }
            if (sw != s) score[sw] += delta[sw];
        }
    }

    // The source loop covers both orientations of every pair.
    std::map<std::string, double> result;
    for (std::size_t v = 0; v < n; ++v) result[g.node_id(static_cast<int>(v))] = score[v] / 2.0;
    return result;
}

Moments distribution_moments(std::span<const double> values, bool excess_kurtosis) {
    Moments m;
    const auto n = static_cast<double>(values.size());
    if (values.size() < 2) return m;
    double sum = 0.0;
    for (double v : values) sum += v;
    const double mean = sum / n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0, ss = 0.0;
    for (double v : values) {
        double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
        ss += d * d;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    m.mean = mean;
    m.stddev = std::sqrt(ss / (n - 1.0));
    if (values.size() >= 3 && m2 > 0.0) {
        m.skewness = m3 / std::pow(m2, 1.5);
        m.kurtosis = m4 / (m2 * m2) - (excess_kurtosis ? 3.0 : 0.0);
    }
    return m;
}

std::vector<double> degree_values(const WeightedGraph& g) {
    auto adj = g.skeleton_adjacency();
    std::vector<double> degrees;
    degrees.reserve(adj.size());
    for (const auto& neighbors : adj) degrees.push_back(static_cast<double>(neighbors.size()));
    return degrees;
}

}  // namespace attnet
