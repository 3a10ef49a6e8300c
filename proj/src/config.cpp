#include "ascf/config.hpp"

#include <json.hpp>

#include <cmath>
#include <set>

#include "ascf/format.hpp"

namespace ascf {

namespace {

using Json = nlohmann::ordered_json;

const char* const kParamKeys[] = {"I",  "Rgf", "Cg", "Cgf", "m",  "e",
                                  "Cm", "Caf", "Cbf", "u",  "v",  "w"};

double* param_slot(GameParameters& p, const std::string& key) {
    if (key == "I") return &p.I;
    if (key == "Rgf") return &p.Rgf;
    if (key == "Cg") return &p.Cg;
    if (key == "Cgf") return &p.Cgf;
    if (key == "m") return &p.m;
    if (key == "e") return &p.e;
    if (key == "Cm") return &p.Cm;
    if (key == "Caf") return &p.Caf;
    if (key == "Cbf") return &p.Cbf;
    if (key == "u") return &p.u;
    if (key == "v") return &p.v;
    return &p.w;
}

}  // namespace

RunConfig parse_config(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        throw ValidationError({std::string("malformed config: ") +
                               err.what()});
    }
    if (!doc.is_object()) {
        throw ValidationError({"config must be a JSON object"});
    }

    std::vector<std::string> issues;
    static const std::set<std::string> known = {
        "I",  "Rgf", "Cg",  "Cgf", "m",       "e",
        "Cm", "Caf", "Cbf", "u",   "v",       "w",
        "dt", "horizon",    "record_every",   "initial", "out_dir"};
    for (const auto& item : doc.items()) {
        if (known.find(item.key()) == known.end()) {
            issues.push_back("unknown key \"" + item.key() + "\"");
        }
    }

    RunConfig config;
    for (const char* key : kParamKeys) {
        if (!doc.contains(key)) {
            issues.push_back(std::string("missing key \"") + key + "\"");
            continue;
        }
        const Json& node = doc[key];
        if (!node.is_number()) {
            issues.push_back(std::string("\"") + key + "\" must be a number");
            continue;
        }
        *param_slot(config.params, key) = node.get<double>();
    }

    auto optional_number = [&](const char* key, double* slot) {
        if (!doc.contains(key)) return;
        const Json& node = doc[key];
        if (!node.is_number()) {
            issues.push_back(std::string("\"") + key + "\" must be a number");
            return;
        }
        *slot = node.get<double>();
    };
    optional_number("dt", &config.integration.dt);
    optional_number("horizon", &config.integration.horizon);

    if (doc.contains("record_every")) {
        const Json& node = doc["record_every"];
        if (!node.is_number_integer()) {
            issues.push_back("\"record_every\" must be an integer");
        } else {
            config.integration.record_every = node.get<int>();
        }
    }

    config.initial_states = {StrategyState{0.5, 0.5, 0.5}};
    if (doc.contains("initial")) {
        const Json& node = doc["initial"];
        if (!node.is_array() || node.empty()) {
            issues.push_back(
                "\"initial\" must be a non-empty array of [x,y,z] triples");
        } else {
            config.initial_states.clear();
            for (std::size_t i = 0; i < node.size(); ++i) {
                const Json& row = node[i];
                const std::string where =
                    "initial[" + std::to_string(i) + "]";
                if (!row.is_array() || row.size() != 3 ||
                    !row[0].is_number() || !row[1].is_number() ||
                    !row[2].is_number()) {
                    issues.push_back("\"" + where +
                                     "\" must be an array of three numbers");
                    continue;
                }
                const StrategyState s{row[0].get<double>(),
                                      row[1].get<double>(),
                                      row[2].get<double>()};
                if (!in_unit_cube(s)) {
                    issues.push_back("\"" + where +
                                     "\" outside the unit cube");
                    continue;
                }
                config.initial_states.push_back(s);
            }
            if (config.initial_states.empty() && issues.empty()) {
                issues.push_back("\"initial\" must contain at least one "
                                 "valid state");
            }
        }
    }

    if (doc.contains("out_dir")) {
        const Json& node = doc["out_dir"];
        if (!node.is_string()) {
            issues.push_back("\"out_dir\" must be a string");
        } else {
            config.out_dir = node.get<std::string>();
        }
    }

    try {
        validate_parameters(config.params);
    } catch (const ValidationError& err) {
        issues.insert(issues.end(), err.issues().begin(),
                      err.issues().end());
    }
    try {
        step_count(config.integration);
    } catch (const ValidationError& err) {
        issues.insert(issues.end(), err.issues().begin(),
                      err.issues().end());
    }

    if (!issues.empty()) throw ValidationError(std::move(issues));
    return config;
}

std::string serialize_config(const RunConfig& config) {
    const GameParameters& p = config.params;
    std::string out = "{\n";
    auto field = [&out](const char* key, double value) {
        out += "  \"";
        out += key;
        out += "\": ";
        out += format_double(value);
        out += ",\n";
    };
    field("I", p.I);
    field("Rgf", p.Rgf);
    field("Cg", p.Cg);
    field("Cgf", p.Cgf);
    field("m", p.m);
    field("e", p.e);
    field("Cm", p.Cm);
    field("Caf", p.Caf);
    field("Cbf", p.Cbf);
    field("u", p.u);
    field("v", p.v);
    field("w", p.w);
    field("dt", config.integration.dt);
    field("horizon", config.integration.horizon);
    out += "  \"record_every\": " +
           std::to_string(config.integration.record_every) + ",\n";
    out += "  \"initial\": [";
    for (std::size_t i = 0; i < config.initial_states.size(); ++i) {
        const StrategyState& s = config.initial_states[i];
        if (i > 0) out += ", ";
        out += "[" + format_double(s.x) + ", " + format_double(s.y) + ", " +
               format_double(s.z) + "]";
    }
    out += "],\n";
    out += "  \"out_dir\": " + Json(config.out_dir).dump() + "\n";
    out += "}\n";
    return out;
}

}  // namespace ascf
