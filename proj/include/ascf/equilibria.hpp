// Equilibrium enumeration, Jacobian, eigenvalues and stability classes.
#pragma once

#include <array>
#include <complex>
#include <optional>

#include "ascf/types.hpp"

namespace ascf {

// Treat |Re lambda| <= this as a zero real part; also the tie margin for
// the scenario conditions.
inline constexpr double kHyperbolicityEps = 1e-9;

// A candidate rest point. E1..E6 are cube vertices; E7/E8 are the mixed
// points, whose coordinates may fall outside [0, 1]. `defined` is false
// when a mixed-point denominator vanishes (coords are then NaN).
struct EquilibriumPoint {
    std::string label;
    std::array<double, 3> coords{0.0, 0.0, 0.0};
    bool defined = true;
    bool valid = false;  // defined and all coordinates in [0, 1]
};

// Row-major Jacobian of (fx, fy, fz) with respect to (x, y, z).
struct Jacobian {
    std::array<std::array<double, 3>, 3> m{};
};

enum class Stability { stable, unstable, saddle, non_hyperbolic };

const char* to_string(Stability s);

struct StabilityVerdict {
    std::array<std::complex<double>, 3> eigenvalues{};
    Stability cls = Stability::saddle;
};

// One evolution-path condition: holds iff both operands are < -eps.
struct ScenarioCondition {
    bool holds = false;
    double op1 = 0.0;
    double op2 = 0.0;
};

// The four parameter regimes that steer the long-run outcome. Each pairs
// with one vertex: 1 -> E1=(0,0,0), 2 -> E3=(0,1,0), 3 -> E5=(0,0,1),
// 4 -> E6=(1,0,1); the operands are that vertex's decisive eigenvalues.
struct ScenarioReport {
    ScenarioCondition scenario1, scenario2, scenario3, scenario4;
};

// The six vertex equilibria plus the two mixed candidates, labeled E1..E8.
std::array<EquilibriumPoint, 8> enumerate_equilibria(const GameParameters& p);

// Analytic Jacobian at any finite point (not restricted to the cube).
Jacobian jacobian(const GameParameters& p, const std::array<double, 3>& s);

// Central-difference Jacobian with step h, for cross-checking.
Jacobian jacobian_fd(const GameParameters& p, const std::array<double, 3>& s,
                     double h);

// Roots of the characteristic polynomial. A diagonal matrix returns its
// diagonal in matrix order; otherwise roots are sorted by (re, im).
std::array<std::complex<double>, 3> eigenvalues3(const Jacobian& m);

// Eigenvalues of the Jacobian at `point` plus the sign-pattern class:
// stable (all re < -eps), unstable (all re > eps), non_hyperbolic (any
// |re| <= eps), saddle otherwise.
StabilityVerdict classify(const GameParameters& p,
                          const EquilibriumPoint& point);

ScenarioReport scenario_report(const GameParameters& p);

}  // namespace ascf
