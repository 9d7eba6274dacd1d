#include "attnet/synth.hpp"

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "attnet/rng.hpp"

namespace attnet {

namespace {

using nlohmann::json;

std::optional<std::vector<std::string>> read_pool(const json& block, const std::string& key) {
    if (!block.contains(key)) return std::nullopt;
    const json& raw = block.at(key);
    if (!raw.is_array()) throw ConfigError("\"" + key + "\" must be an array of labels");
    std::vector<std::string> pool;
    for (const json& label : raw) {
        if (!label.is_string()) throw ConfigError("\"" + key + "\" entries must be strings");
        pool.push_back(label.get<std::string>());
    }
    return pool;
}

double read_rate(const json& block, const std::string& key, double fallback) {
    if (!block.contains(key)) return fallback;
    const json& raw = block.at(key);
    if (!raw.is_number()) throw ConfigError("\"" + key + "\" must be a number");
    return raw.get<double>();
}

FactionConfig read_faction(const json& block, const std::string& count_key) {
    FactionConfig faction;
    if (block.contains("name")) faction.name = block.at("name").get<std::string>();
    if (!block.contains(count_key) || !block.at(count_key).is_number_integer())
        throw ConfigError("faction block needs an integer \"" + count_key + "\"");
    faction.count = block.at(count_key).get<int>();
    faction.university = read_pool(block, "university");
    faction.subject = read_pool(block, "subject");
    faction.occupation = read_pool(block, "occupation");
    faction.military_rate = read_rate(block, "military_rate", 0.0);
    faction.unknown_rate = read_rate(block, "unknown_rate", 0.0);
    return faction;
}

}  // namespace

GeneratorConfig load_generator_config(std::istream& in) {
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("config is not valid JSON: ") + err.what());
    }
    GeneratorConfig config;
    if (!root.contains("years") || !root.at("years").is_array())
        throw ConfigError("config needs a \"years\" array");
    for (const json& year : root.at("years")) {
        if (!year.is_number_integer()) throw ConfigError("\"years\" entries must be integers");
        config.years.push_back(year.get<int>());
    }
    if (!root.contains("parties") || !root.at("parties").is_array())
        throw ConfigError("config needs a \"parties\" array");
    for (const json& party_block : root.at("parties")) {
        PartyConfig party;
        if (!party_block.contains("name") || !party_block.at("name").is_string())
            throw ConfigError("every party needs a string \"name\"");
        party.name = party_block.at("name").get<std::string>();
        if (party_block.contains("factions")) {
            for (const json& faction_block : party_block.at("factions"))
                party.factions.push_back(read_faction(faction_block, "count"));
        } else {
            // Flat party: its own fields act as a single faction.
            FactionConfig faction = read_faction(party_block, "cohort_size");
            faction.name = party.name;
            party.factions.push_back(faction);
        }
        config.parties.push_back(std::move(party));
    }
    validate_generator_config(config);
    return config;
}

GeneratorConfig load_generator_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return load_generator_config(in);
}

void validate_generator_config(const GeneratorConfig& config) {
    const ParseSchema bounds;
    for (int year : config.years) {
        if (year < bounds.year_min || year > bounds.year_max)
            throw ConfigError("year " + std::to_string(year) + " outside " +
                              std::to_string(bounds.year_min) + "-" +
                              std::to_string(bounds.year_max));
    }
    std::set<std::string> party_names;
    for (const PartyConfig& party : config.parties) {
        if (party.name.empty()) throw ConfigError("party name must be nonempty");
        if (!party_names.insert(party.name).second)
            throw ConfigError("duplicate party name: " + party.name);
        for (const FactionConfig& faction : party.factions) {
            if (faction.count < 0)
                throw ConfigError("faction count must be nonnegative in party " + party.name);
            auto check_pool = [&](const std::optional<std::vector<std::string>>& pool,
                                  const char* kind) {
                if (!pool.has_value()) return;
                if (pool->empty())
                    throw ConfigError("faction \"" + faction.name + "\" demands " + kind +
                                      " but lists zero categories");
                for (const std::string& label : *pool)
                    if (label.empty())
                        throw ConfigError(std::string(kind) + " labels must be nonempty");
            };
            check_pool(faction.university, "university");
            check_pool(faction.subject, "subject");
            check_pool(faction.occupation, "occupation");
            auto check_rate = [&](double rate, const char* key) {
                if (rate < 0.0 || rate > 1.0)
                    throw ConfigError(std::string(key) + " must lie in [0, 1]");
            };
            check_rate(faction.military_rate, "military_rate");
            check_rate(faction.unknown_rate, "unknown_rate");
        }
    }
}

namespace {

std::string member_id(const std::string& party, int year, int index) {
    std::string suffix = std::to_string(index);
    if (suffix.size() < 2) suffix.insert(0, "0");
    return party + "-" + std::to_string(year) + "-" + suffix;
}

std::optional<std::string> draw_field(const std::optional<std::vector<std::string>>& pool,
                                      double unknown_rate, SplitMix64& rng) {
    if (!pool.has_value()) return std::nullopt;
    // Both draws always happen so record content never shifts the stream.
    const double miss = rng.unit();
    const std::size_t pick = static_cast<std::size_t>(rng.below(pool->size()));
    if (miss < unknown_rate) return std::nullopt;
    return (*pool)[pick];
}

}  // namespace

std::vector<MemberRecord> synth_corpus(const GeneratorConfig& config, std::uint64_t seed) {
    validate_generator_config(config);
    std::vector<MemberRecord> records;
    // One stream consumed in a fixed order: year, then party, then faction,
    // then member, then field.
    SplitMix64 rng(seed);
    for (int year : config.years) {
        for (const PartyConfig& party : config.parties) {
            int index = 0;
            for (const FactionConfig& faction : party.factions) {
                for (int k = 0; k < faction.count; ++k, ++index) {
                    MemberRecord rec;
                    rec.member_id = member_id(party.name, year, index);
                    rec.year = year;
                    rec.party = party.name;
                    rec.university = draw_field(faction.university, faction.unknown_rate, rng);
                    rec.subject = draw_field(faction.subject, faction.unknown_rate, rng);
                    rec.occupation = draw_field(faction.occupation, faction.unknown_rate, rng);
                    rec.military = rng.unit() < faction.military_rate ? Military::yes
                                                                      : Military::no;
                    records.push_back(std::move(rec));
                }
            }
        }
    }
    return records;
}

}  // namespace attnet
