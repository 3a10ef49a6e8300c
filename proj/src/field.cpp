#include "ascf/field.hpp"

#include "ascf/payoffs.hpp"

namespace ascf {

Velocity replicator_field(const GameParameters& p, const StrategyState& s) {
    const double x = s.x, y = s.y, z = s.z;
    const double bank_gain = z * p.Cgf - p.Cg;
    const double credit_gain = (1.0 - z) * (p.Cm - p.Caf + p.I * p.e * p.v);
    const double channel_gain = p.w * p.I * (1.0 - p.m) - (1.0 - x) * p.Cbf -
                                y * (p.I - p.Cm - p.e * p.I);
    return Velocity{x * (1.0 - x) * bank_gain, y * (1.0 - y) * credit_gain,
                    z * (1.0 - z) * channel_gain};
}

Velocity replicator_field_expanded(const GameParameters& p,
                                   const StrategyState& s) {
    const ExpectedPayoffs ep = expected_payoffs(p, s);
    return Velocity{s.x * (ep.e11 - ep.e_bar_x), s.y * (ep.e21 - ep.e_bar_y),
                    s.z * (ep.e31 - ep.e_bar_z)};
}

FieldParameterDerivatives field_parameter_derivatives(const GameParameters& p,
                                                      const StrategyState& s) {
    const double x = s.x, y = s.y, z = s.z;
    FieldParameterDerivatives d;
    d.dfx_dCg = -x * (1.0 - x);
    d.dfz_dm = -z * (1.0 - z) * p.w * p.I;
    d.dfz_de = z * (1.0 - z) * y * p.I;
    d.dfy_dCm = y * (1.0 - y) * (1.0 - z);
    d.dfz_dCm = z * (1.0 - z) * y;
    d.dfy_de = y * (1.0 - y) * (1.0 - z) * p.I * p.v;
    d.dfz_dI = z * (1.0 - z) * (p.w * (1.0 - p.m) - y * (1.0 - p.e));
    return d;
}

}  // namespace ascf
