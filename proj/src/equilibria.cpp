#include "ascf/equilibria.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ascf/field.hpp"

namespace ascf {

namespace {

bool in01(double c) { return c >= 0.0 && c <= 1.0; }

}  // namespace

const char* to_string(Stability s) {
    switch (s) {
        case Stability::stable: return "stable";
        case Stability::unstable: return "unstable";
        case Stability::saddle: return "saddle";
        case Stability::non_hyperbolic: return "non-hyperbolic";
    }
    return "unknown";
}

std::array<EquilibriumPoint, 8> enumerate_equilibria(const GameParameters& p) {
    std::array<EquilibriumPoint, 8> pts;
    const double vertices[6][3] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0},
                                   {1, 1, 0}, {0, 0, 1}, {1, 0, 1}};
    for (int i = 0; i < 6; ++i) {
        pts[i].label = "E" + std::to_string(i + 1);
        pts[i].coords = {vertices[i][0], vertices[i][1], vertices[i][2]};
        pts[i].defined = true;
        pts[i].valid = true;
    }

    pts[6].label = "E7";
    pts[7].label = "E8";
    if (p.Cbf > 0.0 && p.Cgf > 0.0) {
        const double z = p.Cg / p.Cgf;
        const double x7 = (p.Cbf - p.Cm + p.I - p.I * p.e - p.I * p.w +
                           p.I * p.m * p.w) /
                          p.Cbf;
        const double x8 = (p.Cbf - p.I * p.w + p.I * p.m * p.w) / p.Cbf;
        pts[6].coords = {x7, 1.0, z};
        pts[6].defined = true;
        pts[6].valid = in01(x7) && in01(z);
        pts[7].coords = {x8, 0.0, z};
        pts[7].defined = true;
        pts[7].valid = in01(x8) && in01(z);
    } else {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        for (int i = 6; i < 8; ++i) {
            pts[i].coords = {nan, nan, nan};
            pts[i].defined = false;
            pts[i].valid = false;
        }
    }
    return pts;
}

Jacobian jacobian(const GameParameters& p, const std::array<double, 3>& s) {
    for (double c : s) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("jacobian point must be finite");
        }
    }
    const double x = s[0], y = s[1], z = s[2];
    const double credit_margin = p.Cm - p.Caf + p.I * p.e * p.v;
    const double a_channel_value = p.I - p.Cm - p.e * p.I;
    const double channel_gain = p.w * p.I * (1.0 - p.m) - (1.0 - x) * p.Cbf -
                                y * a_channel_value;
    Jacobian j;
    j.m[0] = {(1.0 - 2.0 * x) * (z * p.Cgf - p.Cg), 0.0,
              x * (1.0 - x) * p.Cgf};
    j.m[1] = {0.0, (1.0 - 2.0 * y) * (1.0 - z) * credit_margin,
              -y * (1.0 - y) * credit_margin};
    j.m[2] = {z * (1.0 - z) * p.Cbf, -z * (1.0 - z) * a_channel_value,
              (1.0 - 2.0 * z) * channel_gain};
    return j;
}

Jacobian jacobian_fd(const GameParameters& p, const std::array<double, 3>& s,
                     double h) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
    Jacobian j;
    for (int col = 0; col < 3; ++col) {
        std::array<double, 3> sp = s, sm = s;
        sp[col] += h;
        sm[col] -= h;
        const Velocity fp = replicator_field(p, {sp[0], sp[1], sp[2]});
        const Velocity fm = replicator_field(p, {sm[0], sm[1], sm[2]});
        j.m[0][col] = (fp.fx - fm.fx) / (2.0 * h);
        j.m[1][col] = (fp.fy - fm.fy) / (2.0 * h);
        j.m[2][col] = (fp.fz - fm.fz) / (2.0 * h);
    }
    return j;
}

StabilityVerdict classify(const GameParameters& p,
                          const EquilibriumPoint& point) {
    if (!point.defined) {
        throw std::invalid_argument("cannot classify an undefined point");
    }
    StabilityVerdict verdict;
    verdict.eigenvalues = eigenvalues3(jacobian(p, point.coords));

    bool all_neg = true, all_pos = true, any_zero = false;
    for (const auto& lambda : verdict.eigenvalues) {
        const double re = lambda.real();
        all_neg = all_neg && re < -kHyperbolicityEps;
        all_pos = all_pos && re > kHyperbolicityEps;
        any_zero = any_zero || std::abs(re) <= kHyperbolicityEps;
    }
    verdict.cls = all_neg    ? Stability::stable
                  : all_pos  ? Stability::unstable
                  : any_zero ? Stability::non_hyperbolic
                             : Stability::saddle;
    return verdict;
}

ScenarioReport scenario_report(const GameParameters& p) {
    auto cond = [](double op1, double op2) {
        return ScenarioCondition{
            op1 < -kHyperbolicityEps && op2 < -kHyperbolicityEps, op1, op2};
    };
    const double iev = p.I * p.e * p.v;
    const double ie = p.I * p.e;
    const double iw = p.I * p.w;
    const double imw = p.I * p.m * p.w;

    ScenarioReport r;
    r.scenario1 = cond(p.Cm - p.Caf + iev, iw - p.Cbf - imw);
    r.scenario2 = cond(p.Caf - p.Cm - iev,
                       p.Cm - p.Cbf - p.I + ie + iw - imw);
    r.scenario3 = cond(p.Cgf - p.Cg, p.Cbf - iw + imw);
    r.scenario4 = cond(p.Cg - p.Cgf, imw - iw);
    return r;
}

}  // namespace ascf
