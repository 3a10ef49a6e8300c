// Closed-form eigenvalues of a real 3x3 matrix via its characteristic cubic.
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ascf/equilibria.hpp"

namespace ascf {

namespace {

using Complex = std::complex<double>;

// Depressed-cubic roots of t^3 + p*t + q = 0.
void depressed_roots(double p, double q, Complex out[3]) {
    const double disc = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0);
    if (disc > 0.0) {
        // One real root; pick the cube root whose operand does not cancel.
        const double sq = std::sqrt(disc);
        const double u3 = -q / 2.0 - std::copysign(sq, q);
        const double u = std::cbrt(u3);
        const double v = u != 0.0 ? -p / (3.0 * u) : 0.0;
        const double t1 = u + v;
        const double im = std::sqrt(3.0) / 2.0 * (u - v);
        out[0] = Complex(t1, 0.0);
        out[1] = Complex(-t1 / 2.0, im);
        out[2] = Complex(-t1 / 2.0, -im);
        return;
    }
    // Three real roots (disc <= 0 forces p <= 0): trigonometric form.
    const double r = std::sqrt(std::max(-p / 3.0, 0.0));
    if (r == 0.0) {
        out[0] = out[1] = out[2] = Complex(0.0, 0.0);
        return;
    }
    const double cos_arg =
        std::clamp(-q / (2.0 * r * r * r), -1.0, 1.0);
    const double theta = std::acos(cos_arg);
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (int k = 0; k < 3; ++k) {
        out[k] = Complex(2.0 * r * std::cos((theta - two_pi * k) / 3.0), 0.0);
    }
}

}  // namespace

std::array<Complex, 3> eigenvalues3(const Jacobian& mat) {
    const auto& m = mat.m;
    double scale = 0.0;
    for (const auto& row : m) {
        for (double value : row) {
            if (!std::isfinite(value)) {
                throw std::invalid_argument("matrix entries must be finite");
            }
            scale = std::max(scale, std::abs(value));
        }
    }

    const bool diagonal = m[0][1] == 0.0 && m[0][2] == 0.0 && m[1][0] == 0.0 &&
                          m[1][2] == 0.0 && m[2][0] == 0.0 && m[2][1] == 0.0;
    if (diagonal) {
        // Keep matrix order so callers see the axis eigenvalues in place.
        return {Complex(m[0][0], 0.0), Complex(m[1][1], 0.0),
                Complex(m[2][2], 0.0)};
    }

    // det(lambda*I - M) = lambda^3 + a2*lambda^2 + a1*lambda + a0
    const double a2 = -(m[0][0] + m[1][1] + m[2][2]);
    const double a1 = m[0][0] * m[1][1] - m[0][1] * m[1][0] +
                      m[0][0] * m[2][2] - m[0][2] * m[2][0] +
                      m[1][1] * m[2][2] - m[1][2] * m[2][1];
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    const double a0 = -det;

    const double p = a1 - a2 * a2 / 3.0;
    const double q = a0 + a2 * (2.0 * a2 * a2 - 9.0 * a1) / 27.0;
    Complex roots[3];
    depressed_roots(p, q, roots);
    for (auto& root : roots) root -= a2 / 3.0;

    // One guarded Newton polish per root; skipped near multiple roots where
    // the derivative degenerates.
    const double scale1 = std::max(1.0, scale);
    const double dpoly_floor = 1e-12 * scale1 * scale1;
    auto poly = [&](Complex z) { return ((z + a2) * z + a1) * z + a0; };
    auto dpoly = [&](Complex z) { return (3.0 * z + 2.0 * a2) * z + a1; };
    for (auto& root : roots) {
        const Complex d = dpoly(root);
        if (std::abs(d) <= dpoly_floor) continue;
        const Complex next = root - poly(root) / d;
        if (std::abs(poly(next)) <= std::abs(poly(root))) root = next;
    }
    // Conjugate symmetry for the complex pair survives the polish by
    // construction of the pair; re-pair to be safe.
    if (roots[1].imag() != 0.0 || roots[2].imag() != 0.0) {
        roots[2] = std::conj(roots[1]);
    }

    std::sort(roots, roots + 3, [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return {roots[0], roots[1], roots[2]};
}

}  // namespace ascf
