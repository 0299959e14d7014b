#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "optolink/sim.hpp"

namespace optolink::scenario {

// Schema violations, unknown fields, bad types. CLI maps these to exit 2.
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;

struct SweepSpec {
    sim::SweepAxis axis = sim::SweepAxis::bitwidth;
    std::vector<double> values;
};

/// Everything one run needs, as parsed from a scenario file. Unknown fields
/// anywhere in the document are rejected.
struct Scenario {
    int schema_version = kSchemaVersion;
    sim::SimConfig config;
    std::optional<SweepSpec> sweep;
    std::optional<std::string> output_format;  // "csv" or "json"
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario_file(const std::string& path);

std::string scenario_to_json(const Scenario& s, int indent = 2);

}  // namespace optolink::scenario
