#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "attnet/graph.hpp"
#include "attnet/hypergraph.hpp"
#include "attnet/records.hpp"

namespace attnet {

enum class NullModel { free_choice, shuffle };

std::string_view model_name(NullModel model);
// Accepts "free_choice" / "free-choice" / "shuffle".
std::optional<NullModel> model_from_name(std::string_view name);

struct NullModelSpec {
    NullModel model = NullModel::shuffle;
    int runs = 100;
    std::uint64_t master_seed = 0;
};

enum class GraphLevel { mp, attribute };

std::string_view level_name(GraphLevel level);
std::optional<GraphLevel> level_from_name(std::string_view name);

std::string_view scheme_name(SLineScheme scheme);
std::optional<SLineScheme> scheme_from_name(std::string_view name);

struct MetricSet {
    bool amf = true;
    bool transitivity = true;
    bool degree_moments = false;
    bool betweenness_moments = false;
};

// Metric keys in emission order: amf, transitivity, degree_*,
// betweenness_* (mean, std, skewness, kurtosis each).
std::vector<std::string> metric_keys(const MetricSet& metrics);

// What to build and measure on each (possibly resampled) slice.
struct PipelineConfig {
    GraphLevel level = GraphLevel::mp;
    SLineConfig sline;  // read when level == attribute
    MetricSet metrics;
};

// Reassigns every known categorical value uniformly from the slice's
// label pool for that kind; UNKNOWN members stay UNKNOWN. The military
// yes-count is preserved exactly by drawing a uniform subset of the
// known-military members. Categories and unknown counts carry over.
CohortSlice free_choice_sample(const CohortSlice& slice, std::uint64_t seed);

// Permutes each attribute column independently over members, UNKNOWN
// placements included, so every per-label holder count is preserved.
CohortSlice shuffle_sample(const CohortSlice& slice, std::uint64_t seed);

CohortSlice null_model_sample(const CohortSlice& slice, NullModel model, std::uint64_t seed);

WeightedGraph build_pipeline_graph(const CohortSlice& slice, const PipelineConfig& pipeline);

// One value per requested metric key; unset when the metric is undefined
// on this graph (too few nodes, zero variance, directed betweenness).
std::map<std::string, std::optional<double>> evaluate_metrics(const WeightedGraph& g,
                                                              const MetricSet& metrics);

struct EnvelopeEntry {
    int runs = 0;  // samples where the metric was defined
    std::optional<double> mean;
    std::optional<double> stddev;  // sample (n-1) form; 0 for a single run
};

struct SimulationEnvelope {
    std::string slice_party;
    int slice_year = 0;
    NullModel model = NullModel::shuffle;
    std::uint64_t master_seed = 0;
    int requested_runs = 0;
    std::string rng;
    GraphLevel level = GraphLevel::mp;
    SLineConfig sline;
    std::map<std::string, EnvelopeEntry> metrics;
};

// Runs the model spec.runs times with seeds derived per run index,
// rebuilds the configured graph each run, and reduces every metric to
// mean and standard deviation. Samples are accumulated in ascending run
// order, so the reduction is independent of any execution schedule.
SimulationEnvelope ensemble_stats(const CohortSlice& slice, const NullModelSpec& spec,
                                  const PipelineConfig& pipeline);

// CSV rows: slice_party, slice_year, model, metric, graph_level, scheme,
// s, runs, mean, std, master_seed. Scheme and s are empty at mp level;
// mean and std are empty when no run defined the metric.
std::string envelope_csv_header();
std::string envelope_to_csv(const SimulationEnvelope& envelope);

}  // namespace attnet
