#include "attnet/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "attnet/csv.hpp"
#include "attnet/format.hpp"
#include "attnet/rng.hpp"

namespace attnet {

std::vector<SeriesRow> build_series(const std::vector<MemberRecord>& records,
                                    const SeriesRequest& request) {
    if (request.runs < 1) throw std::invalid_argument("series needs at least one run per year");
    std::vector<int> years = request.years;
    std::sort(years.begin(), years.end());
    years.erase(std::unique(years.begin(), years.end()), years.end());

    const std::vector<std::string> keys = metric_keys(request.pipeline.metrics);
    std::vector<std::string> sorted_keys = keys;
    std::sort(sorted_keys.begin(), sorted_keys.end());

    std::vector<SeriesRow> rows;
    for (int year : years) {
        CohortSlice slice = slice_panel(records, request.party, year);
        WeightedGraph real = build_pipeline_graph(slice, request.pipeline);
        auto real_values = evaluate_metrics(real, request.pipeline.metrics);

        std::optional<SimulationEnvelope> envelope;
        if (request.model.has_value() && !slice.members.empty()) {
            NullModelSpec spec;
            spec.model = *request.model;
            spec.runs = request.runs;
            spec.master_seed = derive_seed(request.master_seed,
                                           static_cast<std::uint64_t>(year));
            envelope = ensemble_stats(slice, spec, request.pipeline);
        }

        for (const std::string& key : sorted_keys) {
            SeriesRow row;
            row.party = request.party;
            row.year = year;
            row.level = request.pipeline.level;
            row.scheme = request.pipeline.sline.scheme;
            row.s = request.pipeline.sline.s;
            row.metric = key;
            row.real_value = real_values.at(key);
            row.model = request.model;
            if (envelope.has_value()) {
                const EnvelopeEntry& entry = envelope->metrics.at(key);
                row.sim_mean = entry.mean;
                row.sim_std = entry.stddev;
                row.runs = entry.runs;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string series_to_csv(const std::vector<SeriesRow>& rows) {
    std::string out =
        "party,year,graph_level,scheme,s,metric,real_value,sim_mean,sim_std,model,runs\n";
    for (const SeriesRow& row : rows) {
        const bool attribute = row.level == GraphLevel::attribute;
        std::vector<std::string> fields = {
            row.party,
            std::to_string(row.year),
            std::string(level_name(row.level)),
            attribute ? std::string(scheme_name(row.scheme)) : std::string(),
            attribute ? std::to_string(row.s) : std::string(),
            row.metric,
            row.real_value ? format_double(*row.real_value) : std::string(),
            row.sim_mean ? format_double(*row.sim_mean) : std::string(),
            row.sim_std ? format_double(*row.sim_std) : std::string(),
            row.model ? std::string(model_name(*row.model)) : std::string(),
            row.model ? std::to_string(row.runs) : std::string()};
        out += csv::join_row(fields, ',');
        out += '\n';
    }
    return out;
}

}  // namespace attnet
