#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "gft/analytic.hpp"
#include "gft/errors.hpp"
#include "gft/maminda.hpp"
#include "gft/membership.hpp"
#include "gft/quadrature.hpp"
#include "gft/sufficiency.hpp"

namespace gft {

/// Omega: sup |z f' - f| on the guard circle against 1/2.
inline MembershipReport in_omega(const AnalyticMap& f, const DiskGrid& grid) {
    return guard_report([&](Complex z) { return omega_functional(f, z); }, 0.5, grid);
}

/// G_{lambda,alpha}: sup of the g-functional on the guard circle against lambda.
/// A pole on the circle yields an unsatisfied report carrying the diagnostic.
inline MembershipReport in_G(const AnalyticMap& f, const ClassParams& p, const DiskGrid& grid) {
    if (!(p.alpha > 0.0 && p.alpha <= 1.0)) throw DomainError("in_G: alpha must lie in (0, 1]");
    if (!(p.lambda > 0.0)) throw DomainError("in_G: lambda must be > 0");
    try {
        return guard_report([&](Complex z) { return g_functional(f, z, p.alpha); }, p.lambda, grid);
    } catch (const PoleError& e) {
        MembershipReport rep;
        rep.satisfied = false;
        rep.sup_value = INFINITY;
        rep.threshold = p.lambda;
        rep.argmax_r = std::abs(e.where());
        rep.argmax_theta = std::arg(e.where());
        rep.diagnostic = e.what();
        return rep;
    }
}

/// f(z) = z + (z/2) integral_0^z src(zeta) d zeta; a member of Omega whenever |src| <= 1 on D.
inline AnalyticMap build_omega_member(AnalyticMap src) {
    auto primitive = [src](Complex z) {
        if (z == Complex{}) return Complex{};
        return z * quad::adaptive_legendre([&](double s) { return src(s * z); }, 0.0, 1.0);
    };
    return AnalyticMap::from_jet(
        [primitive](Complex z) { return z + 0.5 * z * primitive(z); },
        [src, primitive](Complex z) -> Jet {
            const Complex W = primitive(z);
            const Jet s = src.jet(z);
            return {z + 0.5 * z * W, 1.0 + 0.5 * W + 0.5 * z * s.value, s.value + 0.5 * z * s.d1};
        },
        Provenance::quadrature);
}

/// Disk form of zf'/f subordinate to 1/(1 + c z): sup |f/(z f') - 1| on the guard circle against c.
inline MembershipReport subordination_disk_test(const AnalyticMap& f, double c, const DiskGrid& grid) {
    if (!(c > 0.0 && c < 1.0)) throw DomainError("subordination_disk_test: c must lie in (0, 1)");
    return guard_report(
        [&](Complex z) {
            const Jet j = f.jet(z);
            if (std::abs(j.d1) < kPoleGuard) throw PoleError("subordination_disk_test: f' vanishes", z);
            return std::abs(j.value / (z * j.d1) - 1.0);
        },
        c, grid);
}

/// Disk-sufficient membership in S*(phi): sup |z f'/f - 1| on the guard circle against r1(phi).
inline MembershipReport in_sstar_disk(const AnalyticMap& f, MaMindaName name, const DiskGrid& grid) {
    return guard_report(
        [&](Complex z) {
            const Jet j = f.jet(z);
            if (std::abs(j.value) < kPoleGuard) throw PoleError("in_sstar_disk: f vanishes", z);
            return std::abs(z * j.d1 / j.value - 1.0);
        },
        disk_radius_r1(name), grid);
}

namespace detail {

inline void require_inclusion_params(double lambda, double alpha, const char* op) {
    if (!(lambda > 0.0)) throw DomainError(std::string(op) + ": lambda must be > 0");
    if (!(alpha > 1.0 / 3.0 && alpha < 1.0)) throw DomainError(std::string(op) + ": alpha must lie in (1/3, 1)");
}

}  // namespace detail

/// G_{lambda,alpha} inside Omega when lambda < (2 - sqrt3)(3 alpha - 1).
inline bool inclusion_G_in_Omega(double lambda, double alpha) {
    detail::require_inclusion_params(lambda, alpha, "inclusion_G_in_Omega");
    return lambda < (2.0 - std::sqrt(3.0)) * (3.0 * alpha - 1.0);
}

/// G_{lambda,alpha} inside S*(phi) when (1 + r1) lambda < (3 alpha - 1) r1, r1 being the
/// radius of the largest disk centred at 1 in phi(D).
inline bool inclusion_G_in_Sphi(double lambda, double alpha, double r1) {
    detail::require_inclusion_params(lambda, alpha, "inclusion_G_in_Sphi");
    if (!(r1 > 0.0 && r1 < 1.0)) throw DomainError("inclusion_G_in_Sphi: r1 must lie in (0, 1)");
    return (1.0 + r1) * lambda < (3.0 * alpha - 1.0) * r1;
}

struct InclusionEntry {
    std::string relation;  // (i)..(viii)
    MaMindaName target;
    double r1;
    bool included;
};

/// The eight tabulated inclusion relations, in their printed order (i)..(viii).
inline std::vector<InclusionEntry> inclusion_table(double lambda, double alpha) {
    detail::require_inclusion_params(lambda, alpha, "inclusion_table");
    static const std::pair<const char*, MaMindaName> kRows[] = {
        {"(i)", MaMindaName::SG}, {"(ii)", MaMindaName::e},  {"(iii)", MaMindaName::S},
        {"(iv)", MaMindaName::L},  {"(v)", MaMindaName::Ne},  {"(vi)", MaMindaName::C},
        {"(vii)", MaMindaName::Cr}, {"(viii)", MaMindaName::wp},
    };
    std::vector<InclusionEntry> out;
    for (const auto& [rel, name] : kRows) {
        const double r1 = disk_radius_r1(name);
        out.push_back({rel, name, r1, inclusion_G_in_Sphi(lambda, alpha, r1)});
    }
    return out;
}

}  // namespace gft
