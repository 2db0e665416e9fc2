#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <string>

#include "gft/analytic.hpp"
#include "gft/errors.hpp"
#include "gft/membership.hpp"
#include "gft/quadrature.hpp"

namespace gft {

/// (lambda, alpha, n) for G_{lambda,alpha} over A_n.
struct ClassParams {
    double lambda;
    double alpha;
    int n = 1;
};

enum class SufficiencyVariant { thm1, thm2 };

inline const char* to_string(SufficiencyVariant v) { return v == SufficiencyVariant::thm1 ? "thm1" : "thm2"; }

namespace detail {

inline void require_threshold_params(const ClassParams& p, const char* op) {
    if (!(p.lambda > 0.0)) throw DomainError(std::string(op) + ": lambda must be > 0");
    if (!(p.alpha >= 0.0 && p.alpha < 1.0)) throw DomainError(std::string(op) + ": alpha must lie in [0, 1)");
    if (p.n < 1) throw DomainError(std::string(op) + ": n must be >= 1");
}

}  // namespace detail

/// Coefficients (a, b, c) of the quadratic a r^2 + b r + c whose smallest positive root is delta.
struct DeltaQuadratic {
    double a, b, c;
    double operator()(double r) const { return (a * r + b) * r + c; }
};

inline DeltaQuadratic delta_quadratic(const ClassParams& p) {
    const double n = p.n, al = p.alpha, la = p.lambda;
    return {(1.0 + n) * (2.0 * al * n - la * (n + 1.0) - n),
            n * (1.0 - al + n) * (2.0 * la * (n + 1.0) + n + al * n * n),
            -la * n * n * (n + 1.0 - al) * (n + 1.0 - al)};
}

/// Smallest positive root of the delta quadratic, via the rationalized closed form.
///
/// The result is checked against the quadratic (relative residual below 1e-10) and
/// against delta (n + 1) < n (n + 1 - alpha); a failed check raises AccuracyError.
inline double delta_threshold(const ClassParams& p) {
    detail::require_threshold_params(p, "delta_threshold");
    const double n = p.n, al = p.alpha, la = p.lambda;
    const double rad = n * n + al * al * n * n * n * n + 2.0 * al * n * n * n + 8.0 * al * la * n +
                       12.0 * al * la * n * n + 4.0 * al * la * n * n * n;
    const double delta = 2.0 * la * n * (n + 1.0 - al) /
                         (n + al * n * n + 2.0 * la * (n + 1.0) + std::sqrt(rad));
    const auto q = delta_quadratic(p);
    const double scale = std::abs(q.a) * delta * delta + std::abs(q.b) * delta + std::abs(q.c);
    const double residual = std::abs(q(delta)) / scale;
    if (!(residual < 1e-10)) throw AccuracyError("delta_threshold: quadratic residual too large", residual);
    if (!(delta * (n + 1.0) < n * (n + 1.0 - al)))
        throw AccuracyError("delta_threshold: delta(n+1) < n(n+1-alpha) violated", delta);
    return delta;
}

/// delta (n+1)(n-alpha) / (alpha + (n+1)(n-alpha)).
inline double thm2_threshold(const ClassParams& p) {
    detail::require_threshold_params(p, "thm2_threshold");
    if (!(p.n > p.alpha)) throw DomainError("thm2_threshold: requires n > alpha");
    const double k = (p.n + 1.0) * (p.n - p.alpha);
    return delta_threshold(p) * k / (p.alpha + k);
}

inline double sufficiency_threshold(const ClassParams& p, SufficiencyVariant v) {
    return v == SufficiencyVariant::thm1 ? delta_threshold(p) : thm2_threshold(p);
}

/// Weight exponents (e1, e2) of the double integral for each variant.
inline std::pair<double, double> double_integral_exponents(const ClassParams& p, SufficiencyVariant v) {
    if (v == SufficiencyVariant::thm1) return {p.n - p.alpha, p.n - 1.0};
    return {p.n - 1.0 - p.alpha, static_cast<double>(p.n)};
}

namespace detail {

struct DoubleIntegral {
    Complex I, I1, I2;  // I(z), I'(z), I''(z)
};

inline DoubleIntegral integrate_rs(const AnalyticMap& g, Complex z, const quad::Rule& rr,
                                   const quad::Rule& rs) {
    DoubleIntegral out{};
    for (std::size_t i = 0; i < rr.nodes.size(); ++i) {
        for (std::size_t j = 0; j < rs.nodes.size(); ++j) {
            const double t = rr.nodes[i] * rs.nodes[j];
            const double w = rr.weights[i] * rs.weights[j];
            const Jet gj = g.jet(t * z);
            out.I += w * gj.value;
            out.I1 += w * t * gj.d1;
            out.I2 += w * t * t * gj.d2;
        }
    }
    return out;
}

}  // namespace detail

/// f(z) = z + z^{n+1} integral_0^1 integral_0^1 g(rsz) r^{e1} s^{e2} dr ds.
///
/// Uses tensor-product Gauss–Jacobi rules carrying the weights r^{e1} and s^{e2} exactly:
/// 32x32 nodes, checked against 48x48. A disagreement above 1e-10 (relative) raises
/// AccuracyError.
inline AnalyticMap build_double_integral_fn(AnalyticMap g, const ClassParams& p, SufficiencyVariant v) {
    if (p.n < 1) throw DomainError("build_double_integral_fn: n must be >= 1");
    if (!(p.alpha >= 0.0 && p.alpha < 1.0))
        throw DomainError("build_double_integral_fn: alpha must lie in [0, 1)");
    const auto [e1, e2] = double_integral_exponents(p, v);
    const quad::Rule* r32 = &quad::jacobi_rule(32, e1);
    const quad::Rule* s32 = &quad::jacobi_rule(32, e2);
    const quad::Rule* r48 = &quad::jacobi_rule(48, e1);
    const quad::Rule* s48 = &quad::jacobi_rule(48, e2);
    const int n = p.n;
    auto jet = [=](Complex z) -> Jet {
        const auto lo = detail::integrate_rs(g, z, *r32, *s32);
        const auto hi = detail::integrate_rs(g, z, *r48, *s48);
        const double diff = std::abs(hi.I - lo.I) + std::abs(hi.I1 - lo.I1) + std::abs(hi.I2 - lo.I2);
        const double scale = 1.0 + std::abs(hi.I) + std::abs(hi.I1) + std::abs(hi.I2);
        if (diff > 1e-10 * scale) throw AccuracyError("build_double_integral_fn: 32/48-node check failed", diff);
        const double nd = n;
        const Complex zn1 = ipow(z, n - 1);
        const Complex zn = zn1 * z;
        const Complex zn_plus = zn * z;
        return {z + zn_plus * hi.I,
                1.0 + (nd + 1.0) * zn * hi.I + zn_plus * hi.I1,
                (nd + 1.0) * nd * zn1 * hi.I + 2.0 * (nd + 1.0) * zn * hi.I1 + zn_plus * hi.I2};
    };
    return AnalyticMap::from_jet(jet, Provenance::quadrature);
}

/// Left-hand side of the sufficient condition for the chosen variant at one point:
/// thm1: |z f'' - alpha (f' - f/z)|, thm2: |z f'' - alpha (f' - 1)|.
inline double sufficiency_lhs(const AnalyticMap& f, Complex z, double alpha, SufficiencyVariant v) {
    require_in_disk(z, "sufficiency_lhs");
    if (z == Complex{}) return 0.0;
    const Jet j = f.jet(z);
    if (v == SufficiencyVariant::thm1) return std::abs(z * j.d2 - alpha * (j.d1 - j.value / z));
    return std::abs(z * j.d2 - alpha * (j.d1 - 1.0));
}

/// Sup of the variant's left-hand side on the guard circle against its threshold.
/// The circle-only sup relies on the left-hand side being the modulus of an analytic function.
inline MembershipReport check_sufficient_condition(const AnalyticMap& f, const ClassParams& p,
                                                   SufficiencyVariant v, const DiskGrid& grid) {
    const double threshold = sufficiency_threshold(p, v);
    return guard_report([&](Complex z) { return sufficiency_lhs(f, z, p.alpha, v); }, threshold, grid);
}

}  // namespace gft
