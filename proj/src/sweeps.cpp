#include "ascf/sweeps.hpp"

#include <algorithm>
#include <cmath>

#include "ascf/field.hpp"
#include "ascf/format.hpp"

namespace ascf {

namespace {

std::string state_str(const StrategyState& s) {
    return "(" + format_double(s.x) + " " + format_double(s.y) + " " +
           format_double(s.z) + ")";
}

// Reference cell for figure-style summaries: the cube center if present.
std::size_t reference_state_index(const std::vector<StrategyState>& states) {
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].x == 0.5 && states[i].y == 0.5 && states[i].z == 0.5) {
            return i;
        }
    }
    return 0;
}

double field_component(const Velocity& v, int coord) {
    return coord == 0 ? v.fx : coord == 1 ? v.fy : v.fz;
}

double derivative_member(const FieldParameterDerivatives& d, int which) {
    switch (which) {
        case 0: return d.dfx_dCg;
        case 1: return d.dfz_dm;
        case 2: return d.dfz_de;
        case 3: return d.dfy_dCm;
        case 4: return d.dfz_dCm;
        case 5: return d.dfy_de;
        default: return d.dfz_dI;
    }
}

double parameter_value(const GameParameters& p, const std::string& name) {
    if (name == "Cg") return p.Cg;
    if (name == "m") return p.m;
    if (name == "e") return p.e;
    if (name == "Cm") return p.Cm;
    return p.I;
}

// Monotonicity claims about the per-value trajectory means, matched
// against the reference-state cells.
struct TrajectoryClaim {
    const char* parameter;
    int coord;      // 0=x, 1=y, 2=z
    int direction;  // +1 non-decreasing, -1 non-increasing
    const char* name;
};

constexpr TrajectoryClaim kTrajectoryClaims[] = {
    {"Cg", 0, -1, "mean-x non-increasing in Cg"},
    {"Cg", 1, +1, "mean-y non-decreasing in Cg"},
    {"Cg", 2, -1, "mean-z non-increasing in Cg"},
    {"m", 1, +1, "mean-y non-decreasing in m"},
    {"m", 2, -1, "mean-z non-increasing in m"},
    {"e", 1, +1, "mean-y non-decreasing in e"},
    {"e", 2, +1, "mean-z non-decreasing in e"},
    {"Cm", 0, +1, "mean-x non-decreasing in Cm"},
    {"Cm", 1, +1, "mean-y non-decreasing in Cm"},
    {"Cm", 2, +1, "mean-z non-decreasing in Cm"},
    {"I", 0, +1, "mean-x non-decreasing in I"},
    {"I", 1, +1, "mean-y non-decreasing in I"},
    {"I", 2, +1, "mean-z non-decreasing in I"},
};

}  // namespace

GameParameters with_parameter(const GameParameters& base,
                              const std::string& name, double value) {
    GameParameters p = base;
    if (name == "Cg") {
        p.Cg = value;
    } else if (name == "m") {
        p.m = value;
    } else if (name == "e") {
        p.e = value;
    } else if (name == "Cm") {
        p.Cm = value;
    } else if (name == "I") {
        p.I = value;
    } else {
        throw ValidationError({"unknown sweep parameter \"" + name +
                               "\" (expected Cg, m, e, Cm or I)"});
    }
    return p;
}

std::vector<StrategyState> default_initial_states() {
    std::vector<StrategyState> states;
    states.reserve(28);
    const double levels[] = {0.25, 0.5, 0.75};
    for (double x : levels) {
        for (double y : levels) {
            for (double z : levels) {
                states.push_back({x, y, z});
            }
        }
    }
    states.push_back({0.5, 0.5, 0.5});
    return states;
}

std::array<SweepSpec, 5> builtin_experiments() {
    const GameParameters base = baseline_parameters();
    const std::vector<StrategyState> states = default_initial_states();
    const IntegrationConfig cfg{};
    return {SweepSpec{base, "Cg", {1.0, 1.5, 2.0}, states, cfg},
            SweepSpec{base, "m", {0.20, 0.25, 0.30}, states, cfg},
            SweepSpec{base, "e", {0.25, 0.30, 0.35}, states, cfg},
            SweepSpec{base, "Cm", {1.5, 2.0, 2.5}, states, cfg},
            SweepSpec{base, "I", {10.0, 12.0, 14.0}, states, cfg}};
}

std::vector<ClaimResult> evaluate_field_claims(const GameParameters& p) {
    struct Entry {
        const char* name;
        const char* parameter;
        int coord;        // field component the claim is about
        int member;       // index into FieldParameterDerivatives
        int sign;         // -1 strictly negative, +1 strictly positive,
                          // 0 reported without a sign requirement
    };
    constexpr Entry entries[] = {
        {"dfx/dCg negative", "Cg", 0, 0, -1},
        {"dfz/dm negative", "m", 2, 1, -1},
        {"dfz/de positive", "e", 2, 2, +1},
        {"dfy/dCm positive", "Cm", 1, 3, +1},
        {"dfz/dCm positive", "Cm", 2, 4, +1},
        {"dfy/de positive", "e", 1, 5, +1},
        {"dfz/dI sign-indefinite", "I", 2, 6, 0},
    };

    const double levels[] = {0.25, 0.5, 0.75};
    std::vector<ClaimResult> results;
    results.reserve(std::size(entries));
    for (const Entry& entry : entries) {
        bool sign_ok = true;
        double worst_gap = 0.0;
        double lo = 0.0, hi = 0.0;
        bool first = true;
        for (double x : levels) {
            for (double y : levels) {
                for (double z : levels) {
                    const StrategyState s{x, y, z};
                    const double analytic =
                        derivative_member(field_parameter_derivatives(p, s),
                                          entry.member);
                    const double base_value =
                        parameter_value(p, entry.parameter);
                    const double h =
                        1e-6 * std::max(1.0, std::abs(base_value));
                    const Velocity plus = replicator_field(
                        with_parameter(p, entry.parameter, base_value + h),
                        s);
                    const Velocity minus = replicator_field(
                        with_parameter(p, entry.parameter, base_value - h),
                        s);
                    const double fd =
                        (field_component(plus, entry.coord) -
                         field_component(minus, entry.coord)) /
                        (2.0 * h);
                    worst_gap = std::max(worst_gap, std::abs(analytic - fd));
                    if (entry.sign < 0) {
                        sign_ok = sign_ok && analytic < 0.0;
                    } else if (entry.sign > 0) {
                        sign_ok = sign_ok && analytic > 0.0;
                    }
                    lo = first ? analytic : std::min(lo, analytic);
                    hi = first ? analytic : std::max(hi, analytic);
                    first = false;
                }
            }
        }
        ClaimResult r;
        r.name = entry.name;
        r.gating = entry.sign != 0;
        r.holds = sign_ok && worst_gap <= 1e-6;
        r.detail = "range [" + format_double(lo) + " " + format_double(hi) +
                   "] fd-gap " + format_double(worst_gap);
        results.push_back(std::move(r));
    }
    return results;
}

SweepResult run_sweep(const SweepSpec& spec) {
    std::vector<std::string> issues;
    if (spec.values.empty()) {
        issues.push_back("sweep values must be non-empty");
    }
    for (std::size_t i = 0; i + 1 < spec.values.size(); ++i) {
        if (!(spec.values[i] < spec.values[i + 1])) {
            issues.push_back("sweep values must be strictly increasing");
            break;
        }
    }
    if (spec.initial_states.empty()) {
        issues.push_back("sweep needs at least one initial state");
    }
    if (!issues.empty()) throw ValidationError(std::move(issues));

    std::vector<GameParameters> param_sets;
    param_sets.reserve(spec.values.size());
    for (double value : spec.values) {
        param_sets.push_back(
            validate_parameters(with_parameter(spec.base, spec.parameter,
                                               value)));
    }

    SweepResult result;
    result.spec = spec;
    result.cells.reserve(spec.values.size() * spec.initial_states.size());
    for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
        const GameParameters& p = param_sets[vi];
        const auto all_points = enumerate_equilibria(p);
        std::vector<EquilibriumPoint> candidates;
        for (const auto& point : all_points) {
            if (point.valid) candidates.push_back(point);
        }
        for (std::size_t si = 0; si < spec.initial_states.size(); ++si) {
            const StrategyState& s0 = spec.initial_states[si];
            SweepCell cell;
            cell.value_index = vi;
            cell.state_index = si;
            cell.value = spec.values[vi];
            cell.initial = s0;
            try {
                cell.trajectory = integrate(p, s0, spec.integration);
            } catch (const IntegrationError& err) {
                throw IntegrationError(
                    "sweep " + spec.parameter + "=" +
                    format_double(spec.values[vi]) + " from " +
                    state_str(s0) + ": " + err.what());
            }
            cell.convergence = detect_convergence(
                cell.trajectory, kDefaultSpeedTolerance, candidates);
            double sx = 0.0, sy = 0.0, sz = 0.0;
            for (const auto& sample : cell.trajectory.samples) {
                sx += sample.state.x;
                sy += sample.state.y;
                sz += sample.state.z;
            }
            const double count =
                static_cast<double>(cell.trajectory.samples.size());
            cell.mean_x = sx / count;
            cell.mean_y = sy / count;
            cell.mean_z = sz / count;
            result.cells.push_back(std::move(cell));
        }
    }

    // Field-derivative claims for every swept value.
    for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
        for (ClaimResult claim : evaluate_field_claims(param_sets[vi])) {
            claim.name += " [" + spec.parameter + "=" +
                          format_double(spec.values[vi]) + "]";
            result.claims.push_back(std::move(claim));
        }
    }

    // Trajectory-mean claims from the reference initial state.
    const std::size_t ref = reference_state_index(spec.initial_states);
    const std::size_t n_states = spec.initial_states.size();
    for (const TrajectoryClaim& claim : kTrajectoryClaims) {
        if (spec.parameter != claim.parameter) continue;
        std::vector<double> means;
        means.reserve(spec.values.size());
        for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
            const SweepCell& cell = result.cells[vi * n_states + ref];
            means.push_back(claim.coord == 0   ? cell.mean_x
                            : claim.coord == 1 ? cell.mean_y
                                               : cell.mean_z);
        }
        bool holds = true;
        for (std::size_t i = 0; i + 1 < means.size(); ++i) {
            holds = holds && (claim.direction > 0 ? means[i + 1] >= means[i]
                                                  : means[i + 1] <= means[i]);
        }
        std::string detail = "means";
        for (double mean : means) detail += " " + format_double(mean);
        detail += " from " + state_str(spec.initial_states[ref]);
        result.claims.push_back(
            ClaimResult{claim.name, false, holds, std::move(detail)});
    }
    return result;
}

std::vector<Series> sweep_plot_series(const SweepResult& result, int coord) {
    if (coord < 0 || coord > 2) {
        throw std::invalid_argument("coordinate must be 0, 1 or 2");
    }
    const std::size_t ref =
        reference_state_index(result.spec.initial_states);
    const std::size_t n_states = result.spec.initial_states.size();
    std::vector<Series> series;
    series.reserve(result.spec.values.size());
    for (std::size_t vi = 0; vi < result.spec.values.size(); ++vi) {
        const SweepCell& cell = result.cells[vi * n_states + ref];
        Series s;
        s.label = result.spec.parameter + "=" +
                  format_value_label(result.spec.values[vi]);
        s.points.reserve(cell.trajectory.samples.size());
        for (const auto& sample : cell.trajectory.samples) {
            const double value = coord == 0   ? sample.state.x
                                 : coord == 1 ? sample.state.y
                                              : sample.state.z;
            s.points.emplace_back(sample.t, value);
        }
        series.push_back(std::move(s));
    }
    return series;
}

}  // namespace ascf
