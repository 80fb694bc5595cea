#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "stmr/engine.hpp"

namespace stmr {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string controller_kind_name(ControllerKind kind);

// Accepts the canonical kind names plus the "stmr" shorthand for pure pursuit.
std::optional<ControllerKind> controller_kind_from_name(const std::string& name);

// Throws ConfigError when any invariant fails.
void validate_scenario(const ScenarioConfig& cfg);

// Builds a ScenarioConfig from a parsed document. Every key is optional with
// documented defaults; unknown keys are errors naming the offending path.
ScenarioConfig scenario_from_json(const nlohmann::json& j);

// Loads and validates a scenario file; parse errors keep the library's
// line/column diagnostics.
ScenarioConfig load_scenario(const std::string& path);

// Full configuration echo with defaults made explicit and the initial
// conditions resolved to a concrete pose list (so a run is reproducible from
// the echo alone, seed aside).
nlohmann::json resolved_config_json(const ScenarioConfig& cfg);

// FNV-1a 64 over a canonical dump, as 16 hex digits.
std::string config_hash_hex(const nlohmann::json& j);

}
