#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "gft/analytic.hpp"
#include "gft/errors.hpp"

namespace gft {

// Pointwise inequalities for Schwarz functions, written as scalar functions of
// m = |omega(z)| and r = |z|.

/// Schwarz–Pick: |omega'(z)| <= (1 - m^2)/(1 - r^2).
inline double schwarz_pick_bound(double mod_omega, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("schwarz_pick_bound: r must lie in [0, 1)");
    if (!(mod_omega >= 0.0 && mod_omega <= 1.0))
        throw DomainError("schwarz_pick_bound: |omega| must lie in [0, 1]");
    return (1.0 - mod_omega * mod_omega) / (1.0 - r * r);
}

/// Sharp bound on |omega'| over all Schwarz functions at |z| = r.
inline double dieudonne_deriv_bound(double r) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("dieudonne_deriv_bound: r must lie in (0, 1)");
    if (r <= std::numbers::sqrt2 - 1.0) return 1.0;
    const double q = 1.0 + r * r;
    return q * q / (4.0 * r * (1.0 - r * r));
}

/// Lower bound (m - r^2)(1 + m)/(r (1 - r^2)) for |omega'(z)| on |z| = r.
inline double dieudonne_lower(double mod_omega, double r) {
    if (r == 0.0) throw DomainError("dieudonne_lower: r must be nonzero");
    if (!(r > 0.0 && r < 1.0)) throw DomainError("dieudonne_lower: r must lie in (0, 1)");
    if (mod_omega > r * (1.0 + 1e-12)) throw DomainError("dieudonne_lower: requires |omega| <= r");
    return (mod_omega - r * r) * (1.0 + mod_omega) / (r * (1.0 - r * r));
}

/// Upper bound (r^2 - m^2)/(1 - r^2) for |z omega'(z) - omega(z)| on |z| = r.
inline double dieudonne_crescent(double mod_omega, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("dieudonne_crescent: r must lie in [0, 1)");
    if (mod_omega > r * (1.0 + 1e-12)) throw DomainError("dieudonne_crescent: requires |omega| <= r");
    return (r * r - mod_omega * mod_omega) / (1.0 - r * r);
}

struct AbcCoefficients {
    double A;
    double B;
    double C;
};

/// Coefficients of the quadratic part A w^2 + B w + C of Phi(w, r).
inline AbcCoefficients abc_coeffs(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("abc_coeffs: r must lie in [0, 1)");
    const double r2 = r * r, r3 = r2 * r, r4 = r2 * r2, r5 = r4 * r, r6 = r3 * r3;
    return {
        -4.0 * r6 + r5 + 22.0 * r4 - 4.0 * r3 - 32.0 * r2 + 3.0 * r + 10.0,
        11.0 * r6 - 25.0 * r4 + 23.0 * r2 - 8.0,
        -11.0 * r6 - r5 + 27.0 * r4 + 3.0 * r3 - 18.0 * r2 - 2.0 * r + 4.0,
    };
}

inline double abc_discriminant(double r) {
    const auto [A, B, C] = abc_coeffs(r);
    return B * B - 4.0 * A * C;
}

/// Phi(w, r), the quintic in w whose positivity gives |z| < r inside G_{1/2,1/2} for f in Omega.
/// Coefficients of w^5..w^0 are kept exactly as a bivariate table.
inline double capital_phi(double omega, double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("capital_phi: r must lie in [0, 1)");
    if (!(omega >= 0.0 && omega <= r * (1.0 + 1e-12)))
        throw DomainError("capital_phi: requires 0 <= omega <= r");
    // row k: coefficients of r^0..r^6 multiplying omega^k
    static constexpr double kTable[6][7] = {
        {4.0, -2.0, -18.0, 3.0, 27.0, -1.0, -11.0},
        {-8.0, 0.0, 23.0, 0.0, -25.0, 0.0, 11.0},
        {10.0, 3.0, -32.0, -4.0, 22.0, 1.0, -4.0},
        {1.0, 0.0, 0.0, 0.0, -3.0, 0.0, 0.0},
        {5.0, -1.0, -3.0, 1.0, 0.0, 0.0, 0.0},
        {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
    };
    double acc = 0.0;
    for (int k = 5; k >= 0; --k) {
        double ck = 0.0;
        for (int j = 6; j >= 0; --j) ck = ck * r + kTable[k][j];
        acc = acc * omega + ck;
    }
    return acc;
}

/// Upper bound on |(1 + z f''/f')/(z f'/f) - 1| for f = z + z W(z)/2 in Omega, in terms of
/// w = |W(z)| and r = |z|, assembled from the pointwise Schwarz inequalities above
/// (Schwarz–Pick applied to W', the lower bound on |W'|, and the crescent bound).
inline double omega_to_g_bound(double omega, double r) {
    const double cres = dieudonne_crescent(omega, r);
    const double upper_w1 = schwarz_pick_bound(omega, r);
    const double lower_w1 = dieudonne_lower(omega, r);
    const double upper_w2 = (1.0 - lower_w1 * lower_w1) / (1.0 - r * r);
    const double den = 2.0 * (1.0 - omega) - cres;
    return r * ((2.0 + cres) * upper_w1 + r * upper_w2 * (2.0 + omega)) / (den * den);
}

// ---------------------------------------------------------------------------
// Sample Schwarz functions

enum class SchwarzFamily { power, blaschke_product, scaled_atom };

struct SchwarzSample {
    AnalyticMap omega;
    SchwarzFamily family;
    std::string label;
};

/// omega(z) = z^k
inline SchwarzSample schwarz_power(int k) {
    if (k < 1) throw DomainError("schwarz_power: k must be >= 1");
    return {AnalyticMap::from_jet(
                [k](Complex z) -> Jet {
                    const double kd = k;
                    const Complex zk2 = k >= 2 ? ipow(z, k - 2) : Complex{};
                    const Complex zk1 = ipow(z, k - 1);
                    return {zk1 * z, kd * zk1, kd * (kd - 1.0) * zk2};
                },
                Provenance::closed_form),
            SchwarzFamily::power, "z^" + std::to_string(k)};
}

/// omega(z) = c z with |c| <= 1
inline SchwarzSample schwarz_scaled_atom(Complex c) {
    if (std::abs(c) > 1.0) throw DomainError("schwarz_scaled_atom: |c| must be <= 1");
    return {AnalyticMap::from_jet([c](Complex z) -> Jet { return {c * z, c, 0.0}; },
                                  Provenance::closed_form),
            SchwarzFamily::scaled_atom, "c*z"};
}

/// Two-factor Blaschke product B = b_{a1} b_{a2}, post-composed with the disk automorphism
/// sending B(0) to 0 so that omega(0) = 0 exactly.
inline SchwarzSample schwarz_blaschke(Complex a1, Complex a2) {
    if (!(std::abs(a1) < 1.0 && std::abs(a2) < 1.0))
        throw DomainError("schwarz_blaschke: zeros must lie in the open disk");
    auto factor = [](Complex a, Complex z) -> Jet {
        const Complex d = 1.0 - std::conj(a) * z;
        const double s = 1.0 - std::norm(a);
        return {(z - a) / d, s / (d * d), 2.0 * std::conj(a) * s / (d * d * d)};
    };
    const Complex b = a1 * a2;  // B(0)
    return {AnalyticMap::from_jet(
                [=](Complex z) -> Jet {
                    const Jet p = factor(a1, z), q = factor(a2, z);
                    const Complex B = p.value * q.value;
                    const Complex B1 = p.d1 * q.value + p.value * q.d1;
                    const Complex B2 = p.d2 * q.value + 2.0 * p.d1 * q.d1 + p.value * q.d2;
                    const Jet m = factor(b, B);
                    return {m.value, m.d1 * B1, m.d2 * B1 * B1 + m.d1 * B2};
                },
                Provenance::closed_form),
            SchwarzFamily::blaschke_product, "blaschke"};
}

}  // namespace gft
