// Shared helpers for the test suites: deterministic RNG draws and
// independent oracles (closed-form vertex eigenvalues, Euler integration).
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>

#include "ascf/field.hpp"
#include "ascf/types.hpp"

namespace ascf_test {

struct Rng {
    std::mt19937_64 gen;

    explicit Rng(std::uint64_t seed) : gen(seed) {}

    double uniform(double lo, double hi) {
        const double unit =
            static_cast<double>(gen() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * unit;
    }
};

inline ascf::GameParameters random_valid_parameters(Rng& rng) {
    ascf::GameParameters p;
    p.I = rng.uniform(1.0, 20.0);
    p.Rgf = rng.uniform(0.0, 5.0);
    p.Cg = rng.uniform(0.0, 5.0);
    p.Cgf = rng.uniform(0.0, 5.0);
    p.m = rng.uniform(0.0, 0.5);
    p.e = rng.uniform(0.0, 0.5);
    p.Cm = rng.uniform(0.0, 5.0);
    p.Caf = rng.uniform(0.0, 5.0);
    p.Cbf = rng.uniform(0.0, 5.0);
    p.u = rng.uniform(0.0, 1.0);
    p.v = rng.uniform(0.0, 1.0);
    p.w = rng.uniform(0.0, 1.0);
    return p;
}

inline ascf::StrategyState random_state(Rng& rng) {
    return {rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0),
            rng.uniform(0.0, 1.0)};
}

// Closed-form eigenvalues of the six vertex equilibria, row k for E(k+1),
// written straight from the stability analysis rather than via the
// Jacobian code path.
inline std::array<std::array<double, 3>, 6> vertex_eigenvalue_table(
    const ascf::GameParameters& p) {
    const double iev = p.I * p.e * p.v;
    const double ie = p.I * p.e;
    const double iw = p.I * p.w;
    const double imw = p.I * p.m * p.w;
    return {{{-p.Cg, p.Cm - p.Caf + iev, iw - p.Cbf - imw},
             {p.Cg, p.Cm - p.Caf + iev, iw - imw},
             {-p.Cg, p.Caf - p.Cm - iev,
              p.Cm - p.Cbf - p.I + ie + iw - imw},
             {p.Cg, p.Caf - p.Cm - iev, p.Cm - p.I + ie + iw - imw},
             {p.Cgf - p.Cg, 0.0, p.Cbf - iw + imw},
             {p.Cg - p.Cgf, 0.0, imw - iw}}};
}

// Brute-force explicit Euler on the expanded-payoff field: independent of
// both the RK4 stepping and the closed-form field.
inline ascf::StrategyState euler_integrate(const ascf::GameParameters& p,
                                           ascf::StrategyState s, double dt,
                                           double horizon) {
    const long n = std::lround(horizon / dt);
    for (long i = 0; i < n; ++i) {
        const ascf::Velocity v = ascf::replicator_field_expanded(p, s);
        s.x = std::clamp(s.x + dt * v.fx, 0.0, 1.0);
        s.y = std::clamp(s.y + dt * v.fy, 0.0, 1.0);
        s.z = std::clamp(s.z + dt * v.fz, 0.0, 1.0);
    }
    return s;
}

inline double max_abs_diff3(const std::array<double, 3>& a,
                            const std::array<double, 3>& b) {
    return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]),
                     std::abs(a[2] - b[2])});
}

}  // namespace ascf_test
