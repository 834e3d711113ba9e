#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace angmax {

using ordered_json = nlohmann::ordered_json;

/// Serializes a JSON tree with every number rendered through
/// format_double, so report bytes depend only on the values.
std::string dump_json(const ordered_json& j, int indent = 2);

/// Experiment outcome: flat rows with identical keys, aggregate constants,
/// and failure flags (empty flags == pass). Emission is byte-deterministic.
struct Report {
    std::string experiment;
    std::uint64_t seed = 0;
    ordered_json config = ordered_json::object();
    std::vector<ordered_json> rows;
    ordered_json empirical_constants = ordered_json::object();
    std::vector<std::string> flags;

    bool passed() const { return flags.empty(); }
    void flag(const std::string& what) { flags.push_back(what); }

    std::string to_json() const;
    std::string rows_csv() const; // header from the first row's keys
};

} // namespace angmax
