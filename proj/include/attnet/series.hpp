#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "attnet/null_models.hpp"
#include "attnet/records.hpp"

namespace attnet {

struct SeriesRequest {
    std::string party;
    std::vector<int> years;
    PipelineConfig pipeline;
    std::optional<NullModel> model;
    int runs = 100;
    std::uint64_t master_seed = 0;
};

// One (year, metric) cell of a figure-style sweep. Simulation fields hold
// values only when a model was run and the metric was defined in at least
// one replicate.
struct SeriesRow {
    std::string party;
    int year = 0;
    GraphLevel level = GraphLevel::mp;
    SLineScheme scheme = SLineScheme::uniform;  // read at attribute level
    int s = 1;
    std::string metric;
    std::optional<double> real_value;
    std::optional<double> sim_mean;
    std::optional<double> sim_std;
    std::optional<NullModel> model;
    int runs = 0;  // effective replicate count behind sim_mean/sim_std
};

// Rows ordered by (year, metric key); undefined metrics appear with empty
// value cells rather than being dropped. Each year's ensemble runs under
// a master seed derived from (request.master_seed, year), so per-year
// envelopes do not depend on which other years are swept.
std::vector<SeriesRow> build_series(const std::vector<MemberRecord>& records,
                                    const SeriesRequest& request);

// Header: party,year,graph_level,scheme,s,metric,real_value,sim_mean,
// sim_std,model,runs. Scheme and s are empty at mp level; sim cells and
// model and runs are empty when no model was run.
std::string series_to_csv(const std::vector<SeriesRow>& rows);

}  // namespace attnet
