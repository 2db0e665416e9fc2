#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "gft/analytic.hpp"
#include "gft/errors.hpp"
#include "gft/quadrature.hpp"

namespace gft {

/// The nine Ma–Minda targets: lemniscate sqrt(1+z), exponential, reverse lemniscate,
/// cardioid, sine, crescent, modified sigmoid, cardioid 1+ze^z, nephroid.
enum class MaMindaName { L, e, RL, C, S, Cr, SG, wp, Ne };

inline constexpr std::array<MaMindaName, 9> kAllMaMinda{
    MaMindaName::L, MaMindaName::e, MaMindaName::RL, MaMindaName::C, MaMindaName::S,
    MaMindaName::Cr, MaMindaName::SG, MaMindaName::wp, MaMindaName::Ne};

inline std::string_view to_string(MaMindaName n) {
    switch (n) {
        case MaMindaName::L: return "L";
        case MaMindaName::e: return "e";
        case MaMindaName::RL: return "RL";
        case MaMindaName::C: return "C";
        case MaMindaName::S: return "S";
        case MaMindaName::Cr: return "Cr";
        case MaMindaName::SG: return "SG";
        case MaMindaName::wp: return "wp";
        case MaMindaName::Ne: return "Ne";
    }
    return "?";
}

inline MaMindaName parse_maminda(std::string_view s) {
    for (auto n : kAllMaMinda)
        if (to_string(n) == s) return n;
    throw DomainError("unknown Ma-Minda class name '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Structural formula

namespace detail {

inline void require_normalized_phi(const AnalyticMap& phi) {
    if (std::abs(phi(0.0) - 1.0) > 1e-12) throw DomainError("structural_f0: phi(0) must equal 1");
}

}  // namespace detail

/// integral_0^z (phi(t) - 1)/t dt along the segment [0, z], as integral_0^1 (phi(sz) - 1)/s ds.
inline Complex structural_exponent(const AnalyticMap& phi, Complex z) {
    const Complex d0 = phi.deriv1(0.0);
    auto integrand = [&](double s) -> Complex {
        const Complex t = s * z;
        if (std::abs(t) < 1e-8) return d0 * z;
        return (phi(t) - 1.0) / s;
    };
    return quad::adaptive_legendre(integrand, 0.0, 1.0);
}

/// Extremal function z exp(integral_0^z (phi(t) - 1)/t dt) of S*(phi).
inline Complex structural_f0(const AnalyticMap& phi, Complex z) {
    require_in_disk(z, "structural_f0");
    detail::require_normalized_phi(phi);
    return z * std::exp(structural_exponent(phi, z));
}

/// The structural extremal as an AnalyticMap. Derivatives come from z f0'/f0 = phi:
/// f0' = f0 phi / z and f0'' = f0 (phi (phi - 1) + z phi') / z^2.
inline AnalyticMap structural_extremal(AnalyticMap phi) {
    detail::require_normalized_phi(phi);
    const Complex p1 = phi.deriv1(0.0);
    auto value = [phi](Complex z) { return structural_f0(phi, z); };
    auto jet = [phi, p1](Complex z) -> Jet {
        if (std::abs(z) < 1e-8) return {z + p1 * z * z, 1.0 + 2.0 * p1 * z, 2.0 * p1};
        const Complex f = structural_f0(phi, z);
        const Jet p = phi.jet(z);
        return {f, f * p.value / z, f * (p.value * (p.value - 1.0) + z * p.d1) / (z * z)};
    };
    return AnalyticMap::from_jet(value, jet, Provenance::quadrature);
}

/// Closed-form extremal z exp(h(z)) given h, h', h'' (h(0) = 0).
inline AnalyticMap exp_extremal(std::function<Jet(Complex)> h) {
    return AnalyticMap::from_jet(
        [h](Complex z) -> Jet {
            const Jet e = h(z);
            const Complex f = z * std::exp(e.value);
            // f = z E, f' = E (1 + z h'), f'' = E (2 h' + z h'^2 + z h'')
            const Complex E = std::exp(e.value);
            return {f, E * (1.0 + z * e.d1), E * (2.0 * e.d1 + z * e.d1 * e.d1 + z * e.d2)};
        },
        Provenance::closed_form);
}

// ---------------------------------------------------------------------------
// Catalog

struct MaMindaEntry {
    MaMindaName name;
    std::string phi_formula;
    AnalyticMap phi;
    /// Radius of the largest disk centred at 1 inside phi(D).
    double r1;
    /// false for RL, whose r1 is not part of the inclusion table.
    bool r1_tabulated;
    std::string dist_formula_id;
    std::function<double(double)> dist_max;
    std::optional<AnalyticMap> f0_closed;
    /// max |f0| on |z| = r
    std::function<double(double)> growth_M;

    /// Printed closed form where available, structural quadrature otherwise.
    AnalyticMap f0() const { return f0_closed ? *f0_closed : structural_extremal(phi); }
};

namespace detail {

inline constexpr double kSqrt2 = std::numbers::sqrt2;
inline constexpr double kRlK = kSqrt2 - 1.0;  // sqrt(2) - 1

/// Reverse-lemniscate phi_0(z) = sqrt2 - (sqrt2 - 1) sqrt((1 - z)/(1 + 2(sqrt2 - 1) z)).
inline Jet rl_phi_jet(Complex z) {
    const double k = kRlK;
    const Complex den = 1.0 + 2.0 * k * z;
    const Complex u = (1.0 - z) / den;
    const Complex u1 = -(1.0 + 2.0 * k) / (den * den);
    const Complex u2 = 4.0 * k * (1.0 + 2.0 * k) / (den * den * den);
    const Complex su = std::sqrt(u);
    return {kSqrt2 - k * su, -k * u1 / (2.0 * su),
            -k * (u2 / (2.0 * su) - u1 * u1 / (4.0 * u * su))};
}

/// Reverse-lemniscate extremal in closed product/exp form, principal branches.
inline Complex rl_f0(Complex z) {
    const double k = 2.0 * kRlK;
    const double q = std::sqrt(k);
    const Complex a = std::sqrt(1.0 - z);
    const Complex b = std::sqrt(1.0 + k * z);
    const Complex p0 = q * std::atan(q * (b - a) / (b + k * a));
    return z * std::pow((a + b) / 2.0, k) * std::exp(p0);
}

inline AnalyticMap make_phi(std::function<Jet(Complex)> jet) {
    return AnalyticMap::from_jet(std::move(jet), Provenance::closed_form);
}

inline double structural_growth(const AnalyticMap& phi, double r) {
    return structural_f0(phi, Complex{r, 0.0}).real();
}

inline void require_open_unit(double r, const char* op) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError(std::string(op) + ": r must lie in (0, 1)");
}

inline double rl_dist(double r) {
    const double v = 1.0 - 2.0 * kRlK * r;
    if (v <= 0.0) throw DomainError("dist_max(RL): 1 - 2(sqrt2 - 1) r must be positive");
    return std::abs(kSqrt2 - kRlK * std::sqrt((1.0 + r) / v) - 1.0);
}

/// Distance from 1 to the boundary of the reverse-lemniscate domain.
inline constexpr double kRlDiskRadius = 0.2859241094735884;

inline std::array<MaMindaEntry, 9> build_catalog() {
    using std::exp;
    using std::sqrt;
    const double e = std::numbers::e;

    AnalyticMap phi_L = make_phi([](Complex z) -> Jet {
        const Complex s = sqrt(1.0 + z);
        return {s, 0.5 / s, -0.25 / (s * s * s)};
    });
    AnalyticMap phi_e = make_phi([](Complex z) -> Jet {
        const Complex v = exp(z);
        return {v, v, v};
    });
    AnalyticMap phi_RL = make_phi(rl_phi_jet);
    AnalyticMap phi_C = make_phi([](Complex z) -> Jet {
        return {1.0 + 4.0 * z / 3.0 + 2.0 * z * z / 3.0, 4.0 / 3.0 + 4.0 * z / 3.0, 4.0 / 3.0};
    });
    AnalyticMap phi_S = make_phi([](Complex z) -> Jet {
        return {1.0 + std::sin(z), std::cos(z), -std::sin(z)};
    });
    AnalyticMap phi_Cr = make_phi([](Complex z) -> Jet {
        const Complex s = sqrt(1.0 + z * z);
        return {z + s, 1.0 + z / s, 1.0 / (s * s * s)};
    });
    AnalyticMap phi_SG = make_phi([](Complex z) -> Jet {
        const Complex sg = 1.0 / (1.0 + exp(-z));
        const Complex d1 = sg * (1.0 - sg);
        return {2.0 * sg, 2.0 * d1, 2.0 * d1 * (1.0 - 2.0 * sg)};
    });
    AnalyticMap phi_wp = make_phi([](Complex z) -> Jet {
        const Complex v = exp(z);
        return {1.0 + z * v, (1.0 + z) * v, (2.0 + z) * v};
    });
    AnalyticMap phi_Ne = make_phi([](Complex z) -> Jet {
        return {1.0 + z - z * z * z / 3.0, 1.0 - z * z, -2.0 * z};
    });

    // closed-form extremals z exp(h)
    AnalyticMap f0_L = AnalyticMap::from_jet(
        [](Complex z) -> Jet {
            // f0 = 4 z exp(2 sqrt(1+z) - 2) / (1 + sqrt(1+z))^2; derivatives via z f0'/f0 = phi
            const Complex s = sqrt(1.0 + z);
            const Complex f = 4.0 * z * exp(2.0 * s - 2.0) / ((1.0 + s) * (1.0 + s));
            if (std::abs(z) < 1e-8) return {z + 0.5 * z * z, 1.0 + z, 1.0};
            const Complex p = s, p1 = 0.5 / s;
            return {f, f * p / z, f * (p * (p - 1.0) + z * p1) / (z * z)};
        },
        Provenance::closed_form);
    AnalyticMap f0_wp = exp_extremal([](Complex z) -> Jet {
        const Complex v = exp(z);
        return {v - 1.0, v, v};
    });
    AnalyticMap f0_Ne = exp_extremal([](Complex z) -> Jet {
        return {z - z * z * z / 9.0, 1.0 - z * z / 3.0, -2.0 * z / 3.0};
    });
    AnalyticMap f0_C = exp_extremal([](Complex z) -> Jet {
        return {4.0 * z / 3.0 + z * z / 3.0, 4.0 / 3.0 + 2.0 * z / 3.0, 2.0 / 3.0};
    });
    AnalyticMap f0_RL = AnalyticMap::from_jet(
        [](Complex z) -> Jet {
            const double p1 = 0.5 * kRlK * (1.0 + 2.0 * kRlK);
            if (std::abs(z) < 1e-8) return {z + p1 * z * z, 1.0 + 2.0 * p1 * z, 2.0 * p1};
            const Complex f = rl_f0(z);
            const Jet p = rl_phi_jet(z);
            return {f, f * p.value / z, f * (p.value * (p.value - 1.0) + z * p.d1) / (z * z)};
        },
        Provenance::closed_form);

    auto sg_phi = phi_SG, e_phi = phi_e, s_phi = phi_S, cr_phi = phi_Cr;

    return {{
        {MaMindaName::L, "sqrt(1+z)", phi_L, kSqrt2 - 1.0, true, "1-sqrt(1-r)",
         [](double r) { return 1.0 - sqrt(1.0 - r); }, f0_L,
         [](double r) {
             const double s = sqrt(1.0 + r);
             return 4.0 * r * exp(2.0 * s - 2.0) / ((1.0 + s) * (1.0 + s));
         }},
        {MaMindaName::e, "exp(z)", phi_e, 1.0 - 1.0 / e, true, "exp(r)-1",
         [](double r) { return std::expm1(r); }, std::nullopt,
         [e_phi](double r) { return structural_growth(e_phi, r); }},
        {MaMindaName::RL, "sqrt2-(sqrt2-1)sqrt((1-z)/(1+2(sqrt2-1)z))", phi_RL, kRlDiskRadius, false,
         "|sqrt2-(sqrt2-1)sqrt((1+r)/(1-2(sqrt2-1)r))-1|", rl_dist, f0_RL,
         [](double r) { return std::abs(rl_f0(Complex{r, 0.0})); }},
        {MaMindaName::C, "1+4z/3+2z^2/3", phi_C, 2.0 / 3.0, true, "4r/3+2r^2/3",
         [](double r) { return 4.0 * r / 3.0 + 2.0 * r * r / 3.0; }, f0_C,
         [](double r) { return r * exp(4.0 * r / 3.0 + r * r / 3.0); }},
        {MaMindaName::S, "1+sin(z)", phi_S, std::sin(1.0), true, "sinh(r)",
         [](double r) { return std::sinh(r); }, std::nullopt,
         [s_phi](double r) { return structural_growth(s_phi, r); }},
        {MaMindaName::Cr, "z+sqrt(1+z^2)", phi_Cr, 2.0 - kSqrt2, true, "r+sqrt(1+r^2)-1",
         [](double r) { return r + sqrt(1.0 + r * r) - 1.0; }, std::nullopt,
         [cr_phi](double r) { return structural_growth(cr_phi, r); }},
        {MaMindaName::SG, "2/(1+exp(-z))", phi_SG, (e - 1.0) / (e + 1.0), true, "tan(r/2)",
         [](double r) { return std::tan(r / 2.0); }, std::nullopt,
         [sg_phi](double r) { return structural_growth(sg_phi, r); }},
        {MaMindaName::wp, "1+z*exp(z)", phi_wp, 1.0 / e, true, "r*exp(r)",
         [](double r) { return r * exp(r); }, f0_wp,
         [](double r) { return r * exp(std::expm1(r)); }},
        {MaMindaName::Ne, "1+z-z^3/3", phi_Ne, 2.0 / 3.0, true, "r+r^3/3",
         [](double r) { return r + r * r * r / 3.0; }, f0_Ne,
         [](double r) { return r * exp(r - r * r * r / 9.0); }},
    }};
}

}  // namespace detail

/// Immutable catalog of the nine entries, built on first use.
class MaMindaCatalog {
public:
    static const MaMindaCatalog& instance() {
        static const MaMindaCatalog cat;
        return cat;
    }

    const MaMindaEntry& at(MaMindaName n) const { return entries_[static_cast<std::size_t>(n)]; }
    std::span<const MaMindaEntry> entries() const noexcept { return entries_; }

private:
    MaMindaCatalog() : entries_(detail::build_catalog()) {}
    std::array<MaMindaEntry, 9> entries_;
};

inline const MaMindaEntry& maminda(MaMindaName n) { return MaMindaCatalog::instance().at(n); }

inline double disk_radius_r1(MaMindaName n) { return maminda(n).r1; }

/// max over |z| = r of |phi(z) - 1| in closed form.
inline double dist_max(MaMindaName n, double r) {
    detail::require_open_unit(r, "dist_max");
    return maminda(n).dist_max(r);
}

/// max over |z| = r of |f0(z)|.
inline double growth_M(MaMindaName n, double r) {
    detail::require_open_unit(r, "growth_M");
    return maminda(n).growth_M(r);
}

}  // namespace gft
