#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "attnet/export.hpp"
#include "attnet/format.hpp"
#include "attnet/metrics.hpp"
#include "attnet/motifs.hpp"
#include "attnet/mp_graph.hpp"
#include "attnet/null_models.hpp"
#include "attnet/records.hpp"
#include "attnet/series.hpp"
#include "attnet/synth.hpp"

namespace {

constexpr int kExitData = 2;
constexpr int kExitUsage = 64;

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& message) : std::runtime_error(message) {}
};

std::uint64_t parse_seed_text(const std::string& text, const std::string& what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw UsageError(what + " is not a valid unsigned 64-bit integer: " + text);
    return value;
}

// --seed wins; otherwise the RUN_SEED environment variable; otherwise 0.
std::uint64_t resolve_seed(const CLI::Option* seed_option, std::uint64_t seed_flag) {
    if (seed_option->count() > 0) return seed_flag;
    const char* env = std::getenv("RUN_SEED");
    if (env != nullptr && *env != '\0') return parse_seed_text(env, "RUN_SEED");
    return 0;
}

std::vector<attnet::MemberRecord> read_members(const std::string& path,
                                               const attnet::ParseSchema& schema) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return attnet::parse_members(in, schema);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

// "1958", "1958..1961", or a comma list of either.
std::vector<int> parse_years(const std::string& text) {
    std::vector<int> years;
    std::stringstream tokens(text);
    std::string token;
    while (std::getline(tokens, token, ',')) {
        auto parse_int = [&](const std::string& t) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
            if (ec != std::errc() || ptr != t.data() + t.size())
                throw UsageError("bad year token: " + t);
            return value;
        };
        auto dots = token.find("..");
        if (dots == std::string::npos) {
            years.push_back(parse_int(token));
            continue;
        }
        int from = parse_int(token.substr(0, dots));
        int to = parse_int(token.substr(dots + 2));
        if (to < from) throw UsageError("year range runs backwards: " + token);
        for (int y = from; y <= to; ++y) years.push_back(y);
    }
    if (years.empty()) throw UsageError("no years given");
    return years;
}

attnet::MetricSet parse_metric_list(const std::string& text) {
    attnet::MetricSet metrics{false, false, false, false};
    std::stringstream tokens(text);
    std::string token;
    while (std::getline(tokens, token, ',')) {
        if (token == "amf") {
            metrics.amf = true;
        } else if (token == "transitivity") {
            metrics.transitivity = true;
        } else if (token == "degree") {
            metrics.degree_moments = true;
        } else if (token == "betweenness") {
            metrics.betweenness_moments = true;
        } else if (token == "moments") {
            metrics.degree_moments = true;
            metrics.betweenness_moments = true;
        } else {
            throw UsageError("unknown metric: " + token);
        }
    }
    if (!metrics.amf && !metrics.transitivity && !metrics.degree_moments &&
        !metrics.betweenness_moments)
        throw UsageError("empty metric list");
    return metrics;
}

struct LevelFlags {
    std::string level = "mp";
    std::string scheme = "uniform";
    int s = 1;
};

void add_level_flags(CLI::App* cmd, LevelFlags& flags) {
    cmd->add_option("--level", flags.level, "Graph level")
        ->check(CLI::IsMember({"mp", "attribute"}));
    cmd->add_option("--scheme", flags.scheme, "Line-graph weight scheme")
        ->check(CLI::IsMember({"uniform", "jaccard", "directed"}));
    cmd->add_option("--s", flags.s, "Overlap filtration level")->check(CLI::NonNegativeNumber);
}

attnet::PipelineConfig to_pipeline(const LevelFlags& flags, const attnet::MetricSet& metrics) {
    attnet::PipelineConfig pipeline;
    pipeline.level = *attnet::level_from_name(flags.level);
    pipeline.sline.scheme = *attnet::scheme_from_name(flags.scheme);
    pipeline.sline.s = flags.s;
    pipeline.metrics = metrics;
    return pipeline;
}

struct IngestFlags {
    std::string input;
    attnet::ParseSchema schema;
};

void add_ingest_flags(CLI::App* cmd, IngestFlags& flags) {
    cmd->add_option("--input", flags.input, "Panel CSV file")->required();
    cmd->add_option("--delimiter", flags.schema.delimiter, "Field delimiter");
    cmd->add_option("--unknown-sentinel", flags.schema.unknown_sentinel,
                    "Literal that reads as UNKNOWN besides empty cells");
    cmd->add_option("--year-min", flags.schema.year_min, "Lowest accepted year");
    cmd->add_option("--year-max", flags.schema.year_max, "Highest accepted year");
}

int run_ingest_check(const IngestFlags& flags) {
    auto records = read_members(flags.input, flags.schema);
    std::cout << "records: " << records.size() << "\n";
    for (const auto& [party, year] : attnet::panel_slices(records)) {
        auto slice = attnet::slice_panel(records, party, year);
        std::cout << "slice: " << party << " " << year << " members="
                  << slice.members.size() << "\n";
    }
    return 0;
}

std::string graph_id_for(const std::string& party, int year, const LevelFlags& flags) {
    std::string id = party + "-" + std::to_string(year) + "-" + flags.level;
    if (flags.level == "attribute") id += "-" + flags.scheme + "-s" + std::to_string(flags.s);
    return id;
}

struct BuildFlags {
    IngestFlags ingest;
    std::string party;
    int year = 0;
    LevelFlags level;
    std::string format = "json";
    std::string out;
    std::string metrics_out;
    std::string flow_details;
};

int run_build(const BuildFlags& flags) {
    auto records = read_members(flags.ingest.input, flags.ingest.schema);
    auto slice = attnet::slice_panel(records, flags.party, flags.year);
    if (slice.members.empty())
        throw std::runtime_error("no records for (" + flags.party + ", " +
                                 std::to_string(flags.year) + ")");

    attnet::WeightedGraph graph;
    attnet::NodeAttributes attributes;
    if (flags.level.level == "mp") {
        attnet::MpGraph mp = attnet::build_mp_graph(slice);
        graph = std::move(mp.graph);
        attributes.insert(mp.member_attributes.begin(), mp.member_attributes.end());
    } else {
        attnet::SLineConfig cfg;
        cfg.scheme = *attnet::scheme_from_name(flags.level.scheme);
        cfg.s = flags.level.s;
        graph = attnet::sline_graph(attnet::build_attribute_hypergraph(slice), cfg);
    }

    write_file(flags.out, flags.format == "dot" ? attnet::graph_to_dot(graph)
                                                : attnet::graph_to_json(graph, attributes));

    if (!flags.metrics_out.empty()) {
        attnet::MetricSet all{true, true, true, true};
        auto values = attnet::evaluate_metrics(graph, all);
        std::vector<std::pair<std::string, std::optional<double>>> rows;
        for (const std::string& key : attnet::metric_keys(all))
            rows.emplace_back(key, values.at(key));
        write_file(flags.metrics_out,
                   attnet::metrics_to_csv(graph_id_for(flags.party, flags.year, flags.level),
                                          rows));
    }
    if (!flags.flow_details.empty()) {
        if (graph.node_count() < 2)
            throw std::runtime_error("flow details need at least two nodes");
        attnet::FlowReport report = attnet::all_pairs_max_flow(graph);
        std::map<std::string, double> centrality;
        const bool has_centrality = !graph.directed();
        if (has_centrality) centrality = attnet::betweenness(graph);
        write_file(flags.flow_details,
                   attnet::flow_details_to_json(graph, report,
                                                has_centrality ? &centrality : nullptr));
    }
    return 0;
}

struct SeriesFlags {
    IngestFlags ingest;
    std::string party;
    std::string years;
    LevelFlags level;
    std::string metrics = "amf,transitivity";
    std::string model;
    int runs = 100;
    std::uint64_t seed = 0;
    std::string out;
};

int run_series(const SeriesFlags& flags, const CLI::Option* seed_option) {
    auto records = read_members(flags.ingest.input, flags.ingest.schema);
    attnet::SeriesRequest request;
    request.party = flags.party;
    request.years = parse_years(flags.years);
    request.pipeline = to_pipeline(flags.level, parse_metric_list(flags.metrics));
    if (!flags.model.empty()) request.model = *attnet::model_from_name(flags.model);
    request.runs = flags.runs;
    request.master_seed = resolve_seed(seed_option, flags.seed);

    auto rows = attnet::build_series(records, request);
    bool any_defined = false;
    for (const auto& row : rows) any_defined = any_defined || row.real_value.has_value();
    write_file(flags.out, attnet::series_to_csv(rows));
    if (!any_defined) throw std::runtime_error("every requested year failed");
    return 0;
}

struct SimulateFlags {
    IngestFlags ingest;
    std::string party;
    int year = 0;
    std::string model = "shuffle";
    int runs = 100;
    std::uint64_t seed = 0;
    LevelFlags level;
    std::string metrics = "amf,transitivity";
    std::string out;
};

int run_simulate(const SimulateFlags& flags, const CLI::Option* seed_option) {
    auto records = read_members(flags.ingest.input, flags.ingest.schema);
    auto slice = attnet::slice_panel(records, flags.party, flags.year);
    if (slice.members.empty())
        throw std::runtime_error("no records for (" + flags.party + ", " +
                                 std::to_string(flags.year) + ")");
    attnet::NullModelSpec spec;
    spec.model = *attnet::model_from_name(flags.model);
    spec.runs = flags.runs;
    spec.master_seed = resolve_seed(seed_option, flags.seed);
    auto envelope = attnet::ensemble_stats(
        slice, spec, to_pipeline(flags.level, parse_metric_list(flags.metrics)));
    write_file(flags.out, attnet::envelope_to_csv(envelope));
    return 0;
}

struct DetectFlags {
    std::string graph;
    std::string structure;
    attnet::BouquetThresholds thresholds;
    int min_core = 4;
    int min_sats = 3;
    std::string out;
};

int run_detect(const DetectFlags& flags) {
    attnet::WeightedGraph graph = attnet::graph_from_json_file(flags.graph);
    attnet::MotifReport report =
        flags.structure == "bouquet"
            ? attnet::detect_bouquet(graph, flags.thresholds)
            : attnet::detect_satellite(graph, flags.min_core, flags.min_sats);
    std::string body = attnet::motif_report_to_json(report);
    if (flags.out.empty()) {
        std::cout << body;
    } else {
        write_file(flags.out, body);
    }
    return 0;
}

struct SynthFlags {
    std::string config;
    std::uint64_t seed = 0;
    std::string out;
};

int run_synth(const SynthFlags& flags, const CLI::Option* seed_option) {
    attnet::GeneratorConfig config = attnet::load_generator_config_file(flags.config);
    auto records = attnet::synth_corpus(config, resolve_seed(seed_option, flags.seed));
    write_file(flags.out, attnet::serialize_members(records));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"attributes-as-networks toolkit"};
    app.require_subcommand(1);

    IngestFlags ingest_flags;
    auto* ingest = app.add_subcommand("ingest-check", "Parse and validate a panel CSV");
    add_ingest_flags(ingest, ingest_flags);

    BuildFlags build_flags;
    auto* build = app.add_subcommand("build", "Build one cohort graph and export it");
    add_ingest_flags(build, build_flags.ingest);
    build->add_option("--party", build_flags.party, "Cohort party")->required();
    build->add_option("--year", build_flags.year, "Cohort year")->required();
    add_level_flags(build, build_flags.level);
    build->add_option("--format", build_flags.format, "Export format")
        ->check(CLI::IsMember({"json", "dot"}));
    build->add_option("--out", build_flags.out, "Output path")->required();
    build->add_option("--metrics-out", build_flags.metrics_out,
                      "Also write a metric summary CSV here");
    build->add_option("--flow-details", build_flags.flow_details,
                      "Also write per-pair flows and centrality JSON here");

    SeriesFlags series_flags;
    auto* series = app.add_subcommand("series", "Sweep years and emit a plot-ready CSV");
    add_ingest_flags(series, series_flags.ingest);
    series->add_option("--party", series_flags.party, "Cohort party")->required();
    series->add_option("--years", series_flags.years, "Year list, e.g. 1958..1961")->required();
    add_level_flags(series, series_flags.level);
    series->add_option("--metrics", series_flags.metrics,
                       "Comma list of amf, transitivity, degree, betweenness, moments");
    series->add_option("--model", series_flags.model, "Null model to compare against")
        ->check(CLI::IsMember({"free-choice", "free_choice", "shuffle"}));
    series->add_option("--runs", series_flags.runs, "Replicates per year")
        ->check(CLI::PositiveNumber);
    auto* series_seed = series->add_option("--seed", series_flags.seed, "Master seed");
    series->add_option("--out", series_flags.out, "Output path")->required();

    SimulateFlags simulate_flags;
    auto* simulate =
        app.add_subcommand("simulate", "Run a null-model ensemble for one cohort");
    add_ingest_flags(simulate, simulate_flags.ingest);
    simulate->add_option("--party", simulate_flags.party, "Cohort party")->required();
    simulate->add_option("--year", simulate_flags.year, "Cohort year")->required();
    simulate->add_option("--model", simulate_flags.model, "Null model")
        ->check(CLI::IsMember({"free-choice", "free_choice", "shuffle"}));
    simulate->add_option("--runs", simulate_flags.runs, "Replicates")
        ->check(CLI::PositiveNumber);
    auto* simulate_seed = simulate->add_option("--seed", simulate_flags.seed, "Master seed");
    add_level_flags(simulate, simulate_flags.level);
    simulate->add_option("--metrics", simulate_flags.metrics,
                         "Comma list of amf, transitivity, degree, betweenness, moments");
    simulate->add_option("--out", simulate_flags.out, "Output path")->required();

    DetectFlags detect_flags;
    auto* detect = app.add_subcommand("detect", "Run a motif detector on a graph JSON");
    detect->add_option("--graph", detect_flags.graph, "Graph JSON file")->required();
    detect->add_option("--structure", detect_flags.structure, "Motif to look for")
        ->required()
        ->check(CLI::IsMember({"bouquet", "satellite"}));
    detect->add_option("--min-side", detect_flags.thresholds.min_side,
                       "Bouquet: smallest accepted side");
    detect->add_option("--min-density", detect_flags.thresholds.min_density,
                       "Bouquet: smallest accepted side density");
    detect->add_option("--max-cut", detect_flags.thresholds.max_cut,
                       "Bouquet: largest separator size tried");
    detect->add_option("--min-core", detect_flags.min_core,
                       "Satellite: smallest accepted core");
    detect->add_option("--min-sats", detect_flags.min_sats,
                       "Satellite: fewest accepted satellite components");
    detect->add_option("--out", detect_flags.out, "Output path (stdout when absent)");

    SynthFlags synth_flags;
    auto* synth = app.add_subcommand("synth", "Generate a synthetic panel CSV");
    synth->add_option("--config", synth_flags.config, "Generator config JSON")->required();
    auto* synth_seed = synth->add_option("--seed", synth_flags.seed, "Master seed");
    synth->add_option("--out", synth_flags.out, "Output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (ingest->parsed()) return run_ingest_check(ingest_flags);
        if (build->parsed()) return run_build(build_flags);
        if (series->parsed()) return run_series(series_flags, series_seed);
        if (simulate->parsed()) return run_simulate(simulate_flags, simulate_seed);
        if (detect->parsed()) return run_detect(detect_flags);
        if (synth->parsed()) return run_synth(synth_flags, synth_seed);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return 0;
}
