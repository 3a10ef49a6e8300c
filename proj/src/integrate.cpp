#include "ascf/integrate.hpp"

#include <algorithm>
#include <cmath>

#include "ascf/field.hpp"
#include "ascf/format.hpp"

namespace ascf {

long step_count(const IntegrationConfig& cfg) {
    std::vector<std::string> issues;
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
        issues.push_back("dt must be positive and finite");
    }
    if (!(cfg.horizon > 0.0) || !std::isfinite(cfg.horizon)) {
        issues.push_back("horizon must be positive and finite");
    }
    if (cfg.record_every < 1) {
        issues.push_back("record_every must be at least 1");
    }
    if (!issues.empty()) throw ValidationError(std::move(issues));

    const double ratio = cfg.horizon / cfg.dt;
    if (!(ratio < 1e9)) {
        throw ValidationError({"horizon/dt exceeds 1e9 steps"});
    }
    const long n = std::lround(ratio);
    if (n < 1 ||
        std::abs(static_cast<double>(n) * cfg.dt - cfg.horizon) >
            1e-9 * std::max(1.0, cfg.horizon)) {
        throw ValidationError(
            {"horizon must be a positive integral multiple of dt"});
    }
    return n;
}

StrategyState step_rk4(const GameParameters& p, const StrategyState& s,
                       double dt, double* drift) {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("dt must be positive and finite");
    }
    auto at = [&p](double x, double y, double z) {
        return replicator_field(p, StrategyState{x, y, z});
    };
    const Velocity k1 = at(s.x, s.y, s.z);
    const Velocity k2 = at(s.x + 0.5 * dt * k1.fx, s.y + 0.5 * dt * k1.fy,
                           s.z + 0.5 * dt * k1.fz);
    const Velocity k3 = at(s.x + 0.5 * dt * k2.fx, s.y + 0.5 * dt * k2.fy,
                           s.z + 0.5 * dt * k2.fz);
    const Velocity k4 =
        at(s.x + dt * k3.fx, s.y + dt * k3.fy, s.z + dt * k3.fz);

    double next[3] = {
        s.x + dt / 6.0 * (k1.fx + 2.0 * k2.fx + 2.0 * k3.fx + k4.fx),
        s.y + dt / 6.0 * (k1.fy + 2.0 * k2.fy + 2.0 * k3.fy + k4.fy),
        s.z + dt / 6.0 * (k1.fz + 2.0 * k2.fz + 2.0 * k3.fz + k4.fz)};

    double step_drift = 0.0;
    for (double& c : next) {
        if (!std::isfinite(c)) {
            throw IntegrationError(
                "integration produced a non-finite state; reduce dt");
        }
        const double excess = std::max({c - 1.0, -c, 0.0});
        if (excess > kClampTolerance) {
            throw IntegrationError("integration left the unit cube by " +
                                   format_double(excess) + "; reduce dt");
        }
        step_drift = std::max(step_drift, excess);
        c = std::clamp(c, 0.0, 1.0);
    }
    if (drift != nullptr) *drift = std::max(*drift, step_drift);
    return StrategyState{next[0], next[1], next[2]};
}

Trajectory integrate(const GameParameters& p, const StrategyState& s0,
                     const IntegrationConfig& cfg) {
    if (!in_unit_cube(s0)) {
        throw ValidationError({"initial state outside the unit cube"});
    }
    const long n = step_count(cfg);

    Trajectory traj;
    traj.params = p;
    traj.config = cfg;
    traj.samples.reserve(
        static_cast<std::size_t>(n / cfg.record_every) + 2);
    traj.samples.push_back({0.0, s0});

    StrategyState s = s0;
    for (long i = 1; i <= n; ++i) {
        s = step_rk4(p, s, cfg.dt, &traj.max_boundary_drift);
        if (i % cfg.record_every == 0 || i == n) {
            const double t =
                i == n ? cfg.horizon : static_cast<double>(i) * cfg.dt;
            traj.samples.push_back({t, s});
        }
    }
    return traj;
}

ConvergenceReport detect_convergence(
    const Trajectory& traj, double speed_tol,
    std::span<const EquilibriumPoint> candidates) {
    if (traj.samples.empty()) {
        throw std::invalid_argument("trajectory has no samples");
    }
    ConvergenceReport report;
    report.terminal_state = traj.samples.back().state;
    const Velocity v = replicator_field(traj.params, report.terminal_state);
    report.terminal_speed =
        std::max({std::abs(v.fx), std::abs(v.fy), std::abs(v.fz)});
    report.converged = report.terminal_speed < speed_tol;

    for (const auto& cand : candidates) {
        if (!cand.defined) continue;
        const double dx = report.terminal_state.x - cand.coords[0];
        const double dy = report.terminal_state.y - cand.coords[1];
        const double dz = report.terminal_state.z - cand.coords[2];
        const double dist = std::sqrt(dx * dx + dy * dy + dz * dz);
        if (!report.nearest || dist < report.nearest->distance) {
            report.nearest = NearestEquilibrium{cand.label, dist};
        }
    }
    return report;
}

}  // namespace ascf
