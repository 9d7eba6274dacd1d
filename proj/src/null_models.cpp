#include "attnet/null_models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "attnet/csv.hpp"
#include "attnet/format.hpp"
#include "attnet/metrics.hpp"
#include "attnet/mp_graph.hpp"
#include "attnet/rng.hpp"

namespace attnet {

std::string_view model_name(NullModel model) {
    return model == NullModel::free_choice ? "free_choice" : "shuffle";
}

std::optional<NullModel> model_from_name(std::string_view name) {
    if (name == "free_choice" || name == "free-choice") return NullModel::free_choice;
    if (name == "shuffle") return NullModel::shuffle;
    return std::nullopt;
}

std::string_view level_name(GraphLevel level) {
    return level == GraphLevel::mp ? "mp" : "attribute";
}

std::optional<GraphLevel> level_from_name(std::string_view name) {
    if (name == "mp") return GraphLevel::mp;
    if (name == "attribute") return GraphLevel::attribute;
    return std::nullopt;
}

std::string_view scheme_name(SLineScheme scheme) {
    switch (scheme) {
        case SLineScheme::uniform: return "uniform";
        case SLineScheme::jaccard: return "jaccard";
        case SLineScheme::directed: return "directed";
    }
    throw std::logic_error("unreachable scheme");
}

std::optional<SLineScheme> scheme_from_name(std::string_view name) {
    if (name == "uniform") return SLineScheme::uniform;
    if (name == "jaccard") return SLineScheme::jaccard;
    if (name == "directed") return SLineScheme::directed;
    return std::nullopt;
}

std::vector<std::string> metric_keys(const MetricSet& metrics) {
    std::vector<std::string> keys;
    if (metrics.amf) keys.emplace_back("amf");
    if (metrics.transitivity) keys.emplace_back("transitivity");
    static const char* kMomentSuffixes[] = {"mean", "std", "skewness", "kurtosis"};
    if (metrics.degree_moments)
        for (const char* suffix : kMomentSuffixes) keys.push_back(std::string("degree_") + suffix);
    if (metrics.betweenness_moments)
        for (const char* suffix : kMomentSuffixes)
            keys.push_back(std::string("betweenness_") + suffix);
    return keys;
}

namespace {

std::optional<std::string>& categorical_field(MemberRecord& rec, AttributeKind kind) {
    switch (kind) {
        case AttributeKind::university: return rec.university;
        case AttributeKind::subject: return rec.subject;
        case AttributeKind::occupation: return rec.occupation;
        default: throw std::logic_error("military is not a categorical field");
    }
}

}  // namespace

CohortSlice free_choice_sample(const CohortSlice& slice, std::uint64_t seed) {
    CohortSlice out = slice;  // categories and unknown_counts carry over
    SplitMix64 rng(seed);
    for (AttributeKind kind : kAttributeKinds) {
        if (kind == AttributeKind::military) {
            // Preserve the yes-count exactly: a uniform subset of the
            // known-military members gets "yes", the rest of them "no".
            std::vector<std::size_t> known;
            std::size_t yes_count = 0;
            for (std::size_t i = 0; i < out.members.size(); ++i) {
                if (out.members[i].military == Military::unknown) continue;
                known.push_back(i);
                if (out.members[i].military == Military::yes) ++yes_count;
            }
            rng.shuffle(known);
            for (std::size_t k = 0; k < known.size(); ++k)
                out.members[known[k]].military = k < yes_count ? Military::yes : Military::no;
            continue;
        }
        const auto& pool_set = out.categories.at(kind);
        std::vector<std::string> pool(pool_set.begin(), pool_set.end());
        for (MemberRecord& rec : out.members) {
            auto& field = categorical_field(rec, kind);
            if (!field.has_value()) continue;
            if (pool.empty())
                throw std::logic_error("slice has a known value but an empty label pool");
            field = pool[rng.below(pool.size())];
        }
    }
    return out;
}

CohortSlice shuffle_sample(const CohortSlice& slice, std::uint64_t seed) {
    CohortSlice out = slice;
    SplitMix64 rng(seed);
    for (AttributeKind kind : kAttributeKinds) {
        if (kind == AttributeKind::military) {
            std::vector<Military> column;
            column.reserve(out.members.size());
            for (const MemberRecord& rec : out.members) column.push_back(rec.military);
            rng.shuffle(column);
            for (std::size_t i = 0; i < out.members.size(); ++i)
                out.members[i].military = column[i];
            continue;
        }
        std::vector<std::optional<std::string>> column;
        column.reserve(out.members.size());
        for (MemberRecord& rec : out.members) column.push_back(categorical_field(rec, kind));
        rng.shuffle(column);
        for (std::size_t i = 0; i < out.members.size(); ++i)
            categorical_field(out.members[i], kind) = column[i];
    }
    // Every per-label count is preserved, so the recorded pools still hold;
    // unknown placements moved but their counts did not.
    return out;
}

CohortSlice null_model_sample(const CohortSlice& slice, NullModel model, std::uint64_t seed) {
    return model == NullModel::free_choice ? free_choice_sample(slice, seed)
                                           : shuffle_sample(slice, seed);
}

WeightedGraph build_pipeline_graph(const CohortSlice& slice, const PipelineConfig& pipeline) {
    if (pipeline.level == GraphLevel::mp) return build_mp_graph(slice).graph;
    return sline_graph(build_attribute_hypergraph(slice), pipeline.sline);
}

namespace {

void store_moments(std::map<std::string, std::optional<double>>& out, const std::string& prefix,
                   const Moments& moments) {
    out[prefix + "_mean"] = moments.mean;
    out[prefix + "_std"] = moments.stddev;
    out[prefix + "_skewness"] = moments.skewness;
    out[prefix + "_kurtosis"] = moments.kurtosis;
}

}  // namespace

std::map<std::string, std::optional<double>> evaluate_metrics(const WeightedGraph& g,
                                                              const MetricSet& metrics) {
    std::map<std::string, std::optional<double>> out;
    if (metrics.amf)
        out["amf"] = g.node_count() >= 2 ? std::optional(average_maximal_flow(g)) : std::nullopt;
    if (metrics.transitivity)
        out["transitivity"] =
            g.node_count() >= 1 ? std::optional(transitivity(g)) : std::nullopt;
    if (metrics.degree_moments) {
        auto degrees = degree_values(g);
        store_moments(out, "degree", distribution_moments(degrees));
    }
    if (metrics.betweenness_moments) {
        if (g.directed()) {
            store_moments(out, "betweenness", Moments{});
        } else {
            std::vector<double> values;
            for (const auto& [id, score] : betweenness(g)) values.push_back(score);
            store_moments(out, "betweenness", distribution_moments(values));
        }
    }
    return out;
}

SimulationEnvelope ensemble_stats(const CohortSlice& slice, const NullModelSpec& spec,
                                  const PipelineConfig& pipeline) {
    if (spec.runs < 1) throw std::invalid_argument("ensemble needs at least one run");
    SimulationEnvelope envelope;
    envelope.slice_party = slice.party;
    envelope.slice_year = slice.year;
    envelope.model = spec.model;
    envelope.master_seed = spec.master_seed;
    envelope.requested_runs = spec.runs;
    envelope.rng = kRngName;
    envelope.level = pipeline.level;
    envelope.sline = pipeline.sline;

    std::map<std::string, std::vector<double>> samples;
    for (const std::string& key : metric_keys(pipeline.metrics)) samples[key];
    // Ascending run order keeps the reduction schedule-independent; each
    // run's seed depends only on (master_seed, run index).
    for (int run = 0; run < spec.runs; ++run) {
        CohortSlice sampled =
            null_model_sample(slice, spec.model, derive_seed(spec.master_seed, run));
        WeightedGraph g = build_pipeline_graph(sampled, pipeline);
        for (auto& [key, value] : evaluate_metrics(g, pipeline.metrics)) {
            if (value.has_value()) samples[key].push_back(*value);
        }
    }

    for (const auto& [key, values] : samples) {
        EnvelopeEntry entry;
        entry.runs = static_cast<int>(values.size());
        if (!values.empty()) {
            double sum = 0.0;
            for (double v : values) sum += v;
            double mean = sum / static_cast<double>(values.size());
            entry.mean = mean;
            double ss = 0.0;
            for (double v : values) ss += (v - mean) * (v - mean);
            entry.stddev = values.size() > 1
                               ? std::sqrt(ss / static_cast<double>(values.size() - 1))
                               : 0.0;
        }
        envelope.metrics[key] = entry;
    }
    return envelope;
}

std::string envelope_csv_header() {
    return "slice_party,slice_year,model,metric,graph_level,scheme,s,runs,mean,std,master_seed\n";
}

std::string envelope_to_csv(const SimulationEnvelope& envelope) {
    std::string out = envelope_csv_header();
    const bool attribute = envelope.level == GraphLevel::attribute;
    for (const auto& [metric, entry] : envelope.metrics) {
        std::vector<std::string> fields = {
            envelope.slice_party,
            std::to_string(envelope.slice_year),
            std::string(model_name(envelope.model)),
            metric,
            std::string(level_name(envelope.level)),
            attribute ? std::string(scheme_name(envelope.sline.scheme)) : std::string(),
            attribute ? std::to_string(envelope.sline.s) : std::string(),
            std::to_string(entry.runs),
            entry.mean ? format_double(*entry.mean) : std::string(),
            entry.stddev ? format_double(*entry.stddev) : std::string(),
            std::to_string(envelope.master_seed)};
        out += csv::join_row(fields, ',');
        out += '\n';
    }
    return out;
}

}  // namespace attnet
