// Core domain types for the bank / enterprise-A / enterprise-B financing game.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ascf {

// The twelve model scalars. Ranges: I > 0; Rgf and all C* costs >= 0;
// m, e in [0, 1); u, v, w in [0, 1].
struct GameParameters {
    double I;    // financing amount needed by enterprise B
    double Rgf;  // initial revenue of the bank
    double Cg;   // bank's fintech investment cost
    double Cgf;  // bank's loan cost before the fintech upgrade
    double m;    // bank loan interest rate
    double e;    // enterprise A financing interest rate
    double Cm;   // mediation fee charged by enterprise A
    double Caf;  // borrowing costs for enterprise A
    double Cbf;  // credit guarantee cost at a non-upgraded bank
    double u;    // probability B repays the bank
    double v;    // probability B repays enterprise A
    double w;    // probability B obtains bank approval
};

// Mixed-strategy point: x = P(bank improves fintech), y = P(A provides
// commercial credit), z = P(B chooses bank financing). Each lies in [0, 1].
struct StrategyState {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

// Time derivatives of (x, y, z) under the replicator dynamics.
struct Velocity {
    double fx = 0.0;
    double fy = 0.0;
    double fz = 0.0;
};

// A parameter set (or config document) violated its constraints. Carries one
// message per violation so callers can report them all at once.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

// An integration step produced a non-finite state or left the unit cube by
// more than the clamping tolerance.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Checks every range constraint; throws ValidationError listing all
// violations, otherwise returns the set unchanged.
GameParameters validate_parameters(const GameParameters& raw);

bool in_unit_cube(const StrategyState& s, double tol = 0.0);

// The calibration used by the builtin experiments:
// I=10, Rgf=0, Cg=1, u=0.85, m=0.2, Caf=1, Cm=1.5, v=0.8, e=0.25, w=0.8,
// Cgf=1, Cbf=1.
GameParameters baseline_parameters();

}  // namespace ascf
