#include "ascf/payoffs.hpp"

namespace ascf {

const OutcomePayoffs& PayoffTable::at(bool bank_improves, bool a_provides,
                                      bool b_chooses_bank) const {
    const std::size_t idx = (bank_improves ? 0u : 4u) +
                            (a_provides ? 0u : 2u) + (b_chooses_bank ? 0u : 1u);
    return entries[idx];
}

PayoffTable outcome_payoffs(const GameParameters& p) {
    // Risky cash flows as expectations: the bank collects interest m*I only
    // when B repays (probability u); A collects e*I only when B repays
    // (probability v); B nets I - m*I only when the bank approves
    // (probability w), but the guarantee cost Cbf at a non-upgraded bank is
    // sunk either way.
    const double bank_interest = p.u * (p.m * p.I) + (1.0 - p.u) * 0.0;
    const double bank_improve_bank = p.Rgf + bank_interest - p.Cg;
    const double bank_improve_a = p.Rgf - p.Cg;
    const double bank_keep_bank = p.Rgf + bank_interest - p.Cgf;
    const double bank_keep_a = p.Rgf;
    const double a_serving = -p.Caf + (p.v * (p.e * p.I) + (1.0 - p.v) * 0.0) +
                             p.Cm;
    const double b_bank_upgraded =
        p.w * (p.I - p.m * p.I) + (1.0 - p.w) * 0.0;
    const double b_bank_plain = b_bank_upgraded - p.Cbf;
    const double b_via_a = p.I - p.Cm - p.e * p.I;

    PayoffTable table;
    std::size_t idx = 0;
    for (int improves = 1; improves >= 0; --improves) {
        for (int provides = 1; provides >= 0; --provides) {
            for (int banks = 1; banks >= 0; --banks) {
                OutcomePayoffs o;
                o.bank_improves = improves != 0;
                o.a_provides = provides != 0;
                o.b_chooses_bank = banks != 0;
                o.bank = banks ? (improves ? bank_improve_bank : bank_keep_bank)
                               : (improves ? bank_improve_a : bank_keep_a);
                o.a = (!banks && provides) ? a_serving : 0.0;
                o.b = banks ? (improves ? b_bank_upgraded : b_bank_plain)
                            : (provides ? b_via_a : 0.0);
                table.entries[idx++] = o;
            }
        }
    }
    return table;
}

ExpectedPayoffs expected_payoffs(const GameParameters& p,
                                 const StrategyState& s) {
    const PayoffTable t = outcome_payoffs(p);
    const double x = s.x, y = s.y, z = s.z;
    auto pay = [&t](bool bi, bool ap, bool bc) -> const OutcomePayoffs& {
        return t.at(bi, ap, bc);
    };

    ExpectedPayoffs ep;
    ep.e11 = y * z * pay(true, true, true).bank +
             (1.0 - y) * z * pay(true, false, true).bank +
             y * (1.0 - z) * pay(true, true, false).bank +
             (1.0 - y) * (1.0 - z) * pay(true, false, false).bank;
    ep.e12 = y * z * pay(false, true, true).bank +
             (1.0 - y) * z * pay(false, false, true).bank +
             y * (1.0 - z) * pay(false, true, false).bank +
             (1.0 - y) * (1.0 - z) * pay(false, false, false).bank;
    ep.e_bar_x = x * ep.e11 + (1.0 - x) * ep.e12;

    ep.e21 = x * z * pay(true, true, true).a +
             x * (1.0 - z) * pay(true, true, false).a +
             (1.0 - x) * z * pay(false, true, true).a +
             (1.0 - x) * (1.0 - z) * pay(false, true, false).a;
    ep.e22 = x * z * pay(true, false, true).a +
             x * (1.0 - z) * pay(true, false, false).a +
             (1.0 - x) * z * pay(false, false, true).a +
             (1.0 - x) * (1.0 - z) * pay(false, false, false).a;
    ep.e_bar_y = y * ep.e21 + (1.0 - y) * ep.e22;

    ep.e31 = x * y * pay(true, true, true).b +
             x * (1.0 - y) * pay(true, false, true).b +
             (1.0 - x) * y * pay(false, true, true).b +
             (1.0 - x) * (1.0 - y) * pay(false, false, true).b;
    ep.e32 = x * y * pay(true, true, false).b +
             x * (1.0 - y) * pay(true, false, false).b +
             (1.0 - x) * y * pay(false, true, false).b +
             (1.0 - x) * (1.0 - y) * pay(false, false, false).b;
    ep.e_bar_z = z * ep.e31 + (1.0 - z) * ep.e32;

    return ep;
}

}  // namespace ascf
