// Pure-outcome payoff table and per-player expected payoffs.
#pragma once

#include <array>

#include "ascf/types.hpp"

namespace ascf {

// Payoffs of the three players for one pure-strategy outcome. Risky cash
// flows enter as expectations over the repayment/approval lotteries.
struct OutcomePayoffs {
    bool bank_improves = false;
    bool a_provides = false;
    bool b_chooses_bank = false;
    double bank = 0.0;
    double a = 0.0;
    double b = 0.0;
};

// All eight pure outcomes of the 2x2x2 stage game.
struct PayoffTable {
    std::array<OutcomePayoffs, 8> entries;

    const OutcomePayoffs& at(bool bank_improves, bool a_provides,
                             bool b_chooses_bank) const;
};

// Expected payoffs per strategy and per player under a mixed profile.
// e11/e12: bank improves / keeps; e21/e22: A provides / withholds;
// e31/e32: B borrows from the bank / through A. e_bar_* are the mixes.
struct ExpectedPayoffs {
    double e11 = 0.0, e12 = 0.0, e_bar_x = 0.0;
    double e21 = 0.0, e22 = 0.0, e_bar_y = 0.0;
    double e31 = 0.0, e32 = 0.0, e_bar_z = 0.0;
};

PayoffTable outcome_payoffs(const GameParameters& p);

// Weighted sums over the outcome table; no algebraic simplification.
ExpectedPayoffs expected_payoffs(const GameParameters& p,
                                 const StrategyState& s);

}  // namespace ascf
