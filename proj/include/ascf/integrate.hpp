// Fixed-step RK4 integration of the replicator dynamics.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ascf/equilibria.hpp"
#include "ascf/types.hpp"

namespace ascf {

// A step may overshoot the cube by at most this much before it is an error;
// smaller excursions are clamped back to [0, 1].
inline constexpr double kClampTolerance = 1e-12;

// Default terminal-speed threshold for convergence detection.
inline constexpr double kDefaultSpeedTolerance = 1e-6;

struct IntegrationConfig {
    double dt = 0.01;
    double horizon = 20.0;
    int record_every = 10;  // keep every k-th step (plus t=0 and the end)
};

struct TrajectorySample {
    double t = 0.0;
    StrategyState state;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    GameParameters params{};
    IntegrationConfig config{};
    double max_boundary_drift = 0.0;  // largest pre-clamp cube excursion seen
};

struct NearestEquilibrium {
    std::string label;
    double distance = 0.0;
};

struct ConvergenceReport {
    bool converged = false;
    StrategyState terminal_state;
    double terminal_speed = 0.0;  // max-norm of the field at the end point
    std::optional<NearestEquilibrium> nearest;
};

// Number of steps horizon/dt; throws ValidationError unless that is a
// positive integer (within 1e-9 relative) and record_every >= 1.
long step_count(const IntegrationConfig& cfg);

// One classic RK4 step. Coordinates ending within kClampTolerance outside
// [0, 1] are clamped; larger excursions or non-finite values throw
// IntegrationError. If drift is given, it accumulates the max excursion.
StrategyState step_rk4(const GameParameters& p, const StrategyState& s,
                       double dt, double* drift = nullptr);

// Integrates from s0 for horizon/dt steps, recording every record_every-th
// step plus the initial and final states. Sample times are i*dt, with the
// final sample stamped exactly at the horizon.
Trajectory integrate(const GameParameters& p, const StrategyState& s0,
                     const IntegrationConfig& cfg);

// Converged iff the field's max-norm at the final sample is below speed_tol.
// Reports the nearest defined candidate by Euclidean distance if any.
ConvergenceReport detect_convergence(
    const Trajectory& traj, double speed_tol,
    std::span<const EquilibriumPoint> candidates);

}  // namespace ascf
