// Replicator vector field on the unit cube.
#pragma once

#include "ascf/types.hpp"

namespace ascf {

// Closed-form replicator field:
//   fx = x(1-x)(z*Cgf - Cg)
//   fy = y(1-y)(1-z)(Cm - Caf + I*e*v)
//   fz = z(1-z)(w*I*(1-m) - (1-x)*Cbf - y*(I - Cm - e*I))
// The polynomials are well defined slightly outside the cube, which
// finite-difference probes rely on.
Velocity replicator_field(const GameParameters& p, const StrategyState& s);

// Same field computed from the full expected-payoff sums,
// fx = x*(e11 - e_bar_x) and so on. Serves as an independent cross-check
// of the closed form; agreement is within accumulated rounding.
Velocity replicator_field_expanded(const GameParameters& p,
                                   const StrategyState& s);

// Analytic derivatives of the field with respect to selected parameters,
// used by the sweep claim checks.
struct FieldParameterDerivatives {
    double dfx_dCg = 0.0;  // -x(1-x)
    double dfz_dm = 0.0;   // -z(1-z)*w*I
    double dfz_de = 0.0;   // z(1-z)*y*I
    double dfy_dCm = 0.0;  // y(1-y)(1-z)
    double dfz_dCm = 0.0;  // z(1-z)*y
    double dfy_de = 0.0;   // y(1-y)(1-z)*I*v
    double dfz_dI = 0.0;   // z(1-z)*(w(1-m) - y(1-e)); sign depends on y
};

FieldParameterDerivatives field_parameter_derivatives(const GameParameters& p,
                                                      const StrategyState& s);

}  // namespace ascf
