#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "attnet/records.hpp"

namespace attnet {

// One block of members sharing the same generation rules. A pool that is
// absent means the faction never uses that kind (always UNKNOWN); a pool
// that is present must be nonempty.
struct FactionConfig {
    std::string name;
    int count = 0;  // members per year
    std::optional<std::vector<std::string>> university;
    std::optional<std::vector<std::string>> subject;
    std::optional<std::vector<std::string>> occupation;
    double military_rate = 0.0;  // probability of military = yes (else no)
    double unknown_rate = 0.0;   // probability a pooled field stays UNKNOWN
};

struct PartyConfig {
    std::string name;
    std::vector<FactionConfig> factions;
};

struct GeneratorConfig {
    std::vector<int> years;
    std::vector<PartyConfig> parties;
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& message) : std::runtime_error(message) {}
};

// JSON layout: {"years": [...], "parties": [{"name", "factions": [{"name",
// "count", "university", "subject", "occupation", "military_rate",
// "unknown_rate"}]}]}. A party without "factions" needs "cohort_size" and
// the pool keys at the party level, which become its single faction.
GeneratorConfig load_generator_config(std::istream& in);
GeneratorConfig load_generator_config_file(const std::string& path);

// Rejects empty pools, counts < 0, rates outside [0, 1], duplicate party
// names, out-of-range years, and empty names.
void validate_generator_config(const GeneratorConfig& config);

// Deterministic for fixed (config, seed): one record per faction member
// per year, ids "<party>-<year>-<index>" with the index zero-padded and
// running across the party's factions in config order.
std::vector<MemberRecord> synth_corpus(const GeneratorConfig& config, std::uint64_t seed);

}  // namespace attnet
