#include <cmath>
#include <numeric>
#include <utility>

#include "ascf/types.hpp"

namespace ascf {

namespace {

std::string join_issues(const std::vector<std::string>& issues) {
    std::string msg;
    for (const auto& issue : issues) {
        if (!msg.empty()) msg += "; ";
        msg += issue;
    }
    return msg.empty() ? std::string("validation failed") : msg;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

GameParameters validate_parameters(const GameParameters& raw) {
    std::vector<std::string> issues;
    auto finite = [&](double value, const char* name) {
        if (std::isfinite(value)) return true;
        issues.push_back(std::string(name) + " must be finite");
        return false;
    };

    if (finite(raw.I, "I") && !(raw.I > 0)) {
        issues.push_back("I must be positive");
    }
    const std::pair<double, const char*> costs[] = {
        {raw.Rgf, "Rgf"}, {raw.Cg, "Cg"},   {raw.Cgf, "Cgf"},
        {raw.Cm, "Cm"},   {raw.Caf, "Caf"}, {raw.Cbf, "Cbf"}};
    for (const auto& [value, name] : costs) {
        if (finite(value, name) && value < 0) {
            issues.push_back(std::string(name) + " must be non-negative");
        }
    }
    const std::pair<double, const char*> rates[] = {{raw.m, "m"},
                                                    {raw.e, "e"}};
    for (const auto& [value, name] : rates) {
        if (finite(value, name) && !(value >= 0 && value < 1)) {
            issues.push_back(std::string(name) + " out of [0,1)");
        }
    }
    const std::pair<double, const char*> probs[] = {
        {raw.u, "u"}, {raw.v, "v"}, {raw.w, "w"}};
    for (const auto& [value, name] : probs) {
        if (finite(value, name) && !(value >= 0 && value <= 1)) {
            issues.push_back(std::string(name) + " out of [0,1]");
        }
    }

    if (!issues.empty()) throw ValidationError(std::move(issues));
    return raw;
}

bool in_unit_cube(const StrategyState& s, double tol) {
    auto ok = [tol](double c) {
        return std::isfinite(c) && c >= -tol && c <= 1.0 + tol;
    };
    return ok(s.x) && ok(s.y) && ok(s.z);
}

GameParameters baseline_parameters() {
    return GameParameters{.I = 10.0,
                          .Rgf = 0.0,
                          .Cg = 1.0,
                          .Cgf = 1.0,
                          .m = 0.2,
                          .e = 0.25,
                          .Cm = 1.5,
                          .Caf = 1.0,
                          .Cbf = 1.0,
                          .u = 0.85,
                          .v = 0.8,
                          .w = 0.8};
}

}  // namespace ascf
