// Parameter sweeps over the dynamics and the figure-claim checks.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "ascf/integrate.hpp"
#include "ascf/svg.hpp"
#include "ascf/types.hpp"

namespace ascf {

struct SweepSpec {
    GameParameters base{};
    std::string parameter;               // one of: Cg, m, e, Cm, I
    std::vector<double> values;          // strictly increasing
    std::vector<StrategyState> initial_states;
    IntegrationConfig integration{};
};

// One (parameter value, initial state) run.
struct SweepCell {
    std::size_t value_index = 0;
    std::size_t state_index = 0;
    double value = 0.0;
    StrategyState initial;
    Trajectory trajectory;
    ConvergenceReport convergence;
    double mean_x = 0.0, mean_y = 0.0, mean_z = 0.0;  // over recorded samples
};

// Outcome of one claim check. Gating claims (analytic derivative signs)
// are expected to hold; trajectory-summary claims are reported only.
struct ClaimResult {
    std::string name;
    bool gating = false;
    bool holds = false;
    std::string detail;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepCell> cells;  // value-major, then initial-state order
    std::vector<ClaimResult> claims;
};

// Copy of `base` with the named scalar replaced; throws ValidationError for
// names other than Cg, m, e, Cm, I.
GameParameters with_parameter(const GameParameters& base,
                              const std::string& name, double value);

// The 27-point lattice {0.25, 0.5, 0.75}^3 in x-major order, followed by
// the cube center (28 states).
std::vector<StrategyState> default_initial_states();

// The five stock experiments around the baseline calibration:
// Cg in (1.0, 1.5, 2.0), m in (0.20, 0.25, 0.30), e in (0.25, 0.30, 0.35),
// Cm in (1.5, 2.0, 2.5), I in (10, 12, 14).
std::array<SweepSpec, 5> builtin_experiments();

// Derivative-sign checks of the field in the swept parameters, evaluated
// at every state of an interior grid and cross-checked against central
// finite differences. The dfz/dI entry has no fixed sign and is reported
// without gating.
std::vector<ClaimResult> evaluate_field_claims(const GameParameters& p);

// Runs every (value, initial state) cell, attaches convergence reports and
// the claim checks. Integration failures are rethrown annotated with the
// offending cell.
SweepResult run_sweep(const SweepSpec& spec);

// Per-value series of one coordinate (0=x, 1=y, 2=z) against time, taken
// from the reference initial state (the cube center if present, else the
// first), labeled "<parameter>=<value>".
std::vector<Series> sweep_plot_series(const SweepResult& result, int coord);

}  // namespace ascf
