// JSON run-configuration parsing and serialization.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ascf/integrate.hpp"
#include "ascf/types.hpp"

namespace ascf {

struct RunConfig {
    GameParameters params{};
    IntegrationConfig integration{};
    std::vector<StrategyState> initial_states{
        StrategyState{0.5, 0.5, 0.5}};  // default: the cube center
    std::string out_dir = "out";
};

// Parses a JSON object with the twelve parameter keys (required) plus
// optional "dt", "horizon", "record_every", "initial" (array of [x,y,z]
// triples) and "out_dir". Unknown keys, type mismatches and range
// violations are all collected into one ValidationError.
RunConfig parse_config(std::string_view text);

// Canonical JSON form; parse_config(serialize_config(c)) reproduces c
// bit-exactly.
std::string serialize_config(const RunConfig& config);

}  // namespace ascf
