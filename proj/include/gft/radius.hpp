#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gft/analytic.hpp"
#include "gft/errors.hpp"
#include "gft/maminda.hpp"
#include "gft/schwarz.hpp"

namespace gft {

using ScalarFn = std::function<double(double)>;

struct RootResult {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

/// Brent's method on a sign-changing bracket [a, b]. Stops once the bracket is narrower
/// than tol/2 (or cannot shrink further in double precision).
inline RootResult brent_refine(const ScalarFn& psi, double a, double b, double fa, double fb,
                               double tol, int max_iter = 300) {
    RootResult res{0.0, 0.0, 0, a, b};
    if (fa == 0.0) return {a, 0.0, 0, a, b};
    if (fb == 0.0) return {b, 0.0, 0, a, b};
    if (fa * fb > 0.0) throw NotFoundError("brent_refine: bracket does not change sign");
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double c = a, fc = fa, d = b - a, e = d;
    int it = 0;
    for (; it < max_iter; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa; d = b - a; e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * eps * std::abs(b) + 0.25 * tol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) break;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // secant or inverse quadratic interpolation
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::abs(d) > tol1 ? d : (xm > 0.0 ? tol1 : -tol1);
        fb = psi(b);
    }
    res.root = b;
    res.residual = std::abs(fb);
    res.iterations = it;
    return res;
}

/// First root of psi on (0, 1): scans r = h, 2h, ... for a sign change, then refines with Brent.
inline RootResult smallest_positive_root(const ScalarFn& psi, double scan_step = 0.005, double tol = 1e-12) {
    if (!(scan_step > 0.0 && scan_step <= 0.01))
        throw DomainError("smallest_positive_root: scan_step must lie in (0, 0.01]");
    if (!(tol >= 0.0)) throw DomainError("smallest_positive_root: tol must be >= 0");
    double r_prev = scan_step;
    double f_prev = psi(r_prev);
    if (f_prev == 0.0) return {r_prev, 0.0, 0, r_prev, r_prev};
    for (int k = 2;; ++k) {
        const double r = k * scan_step;
        if (!(r < 1.0)) break;
        const double f = psi(r);
        if (f == 0.0) return {r, 0.0, 0, r_prev, r};
        if ((f > 0.0) != (f_prev > 0.0)) {
            auto res = brent_refine(psi, r_prev, r, f_prev, f, tol);
            res.bracket_lo = r_prev;
            res.bracket_hi = r;
            return res;
        }
        r_prev = r;
        f_prev = f;
    }
    throw NotFoundError("smallest_positive_root: no sign change in (0, 1)");
}

struct EmpiricalRadius {
    double radius = 0.0;
    /// functional never reaches the threshold on (0, 1); radius is reported as 1.
    bool saturated = false;
};

/// Largest r with functional(r) < class_threshold, by bisection; functional must be nondecreasing.
inline EmpiricalRadius empirical_radius(double class_threshold, const ScalarFn& functional, double tol = 1e-12) {
    constexpr double kTop = 1.0 - 1e-9;
    if (functional(kTop) < class_threshold) return {1.0, true};
    double lo = 0.0, hi = kTop;
    while (hi - lo > std::max(tol, 4.0 * std::numeric_limits<double>::epsilon())) {
        const double mid = 0.5 * (lo + hi);
        if (functional(mid) < class_threshold) lo = mid;
        else hi = mid;
    }
    return {lo, false};
}

// ---------------------------------------------------------------------------
// Radius problems

struct RadiusProblem {
    std::string id;
    std::string description;
    /// Equation actually solved, in plain text.
    std::string equation;
    ScalarFn psi;
    double lo = 0.0;
    double hi = 1.0;
    double expected = 0.0;
    std::string expected_source;
    /// Comparison tolerance for |computed - expected|.
    double tolerance = 1e-4;
    bool sharp = false;
    /// r -> sup over |z| = r of |z f0' - f0|; must equal sharpness_threshold at the root.
    ScalarFn sharpness_check;
    double sharpness_threshold = 0.5;
    /// Class whose dist_max * growth_M re-derives the radius independently.
    std::optional<MaMindaName> empirical_class;
};

namespace detail {

/// Thread-safe memo for psi functions that need quadrature.
inline ScalarFn memoize(ScalarFn fn) {
    struct State {
        std::mutex mu;
        std::map<double, double> cache;
    };
    auto st = std::make_shared<State>();
    return [fn = std::move(fn), st](double r) {
        {
            std::lock_guard lock(st->mu);
            if (auto it = st->cache.find(r); it != st->cache.end()) return it->second;
        }
        const double v = fn(r);
        std::lock_guard lock(st->mu);
        st->cache.emplace(r, v);
        return v;
    };
}

inline ScalarFn omega_psi(MaMindaName name) {
    return memoize([name](double r) { return 2.0 * dist_max(name, r) * growth_M(name, r) - 1.0; });
}

/// sup over |z| = r of |z f0' - f0| for the entry's extremal function.
inline ScalarFn omega_sharpness(MaMindaName name, int angular = 4096) {
    return [name, angular](double r) {
        const AnalyticMap f0 = maminda(name).f0();
        return sup_on_circle([&](Complex z) { return omega_functional(f0, z); }, r, angular).value;
    };
}

}  // namespace detail

/// The degree-12 polynomial of the Omega -> G_{1/2,1/2} radius (equal to -(B^2 - 4AC)).
inline double omega_to_g_polynomial(double r) {
    static constexpr double c[] = {96, -32, -888, 96, 2875, 28, -4286, -212, 2969, 148, -854, -28, 55};
    double acc = 0.0;
    for (int k = 12; k >= 0; --k) acc = acc * r + c[k];
    return acc;
}

/// Every radius problem, R1..R13.
inline std::vector<RadiusProblem> radius_catalog() {
    using std::exp;
    using std::sqrt;
    std::vector<RadiusProblem> out;

    out.push_back({"R1", "Omega -> G_{1/2,1/2}",
                   "55r^12-28r^11-854r^10+148r^9+2969r^8-212r^7-4286r^6+28r^5+2875r^4+96r^3-888r^2-32r+96=0",
                   omega_to_g_polynomial, 0.01, 0.45, 0.430496, "reference", 1e-4, false, {}, 0.5, std::nullopt});

    auto omega_problem = [&](const char* id, const char* desc, const char* eq, MaMindaName name,
                             double expected, double tol, bool sharp) {
        RadiusProblem p{id, desc, eq, detail::omega_psi(name), 0.05, 0.95, expected, "reference", tol, sharp,
                        {}, 0.5, name};
        if (sharp) p.sharpness_check = detail::omega_sharpness(name);
        out.push_back(std::move(p));
    };
    omega_problem("R2", "S*_e -> Omega", "2(e^r-1)f0_e(r)-1=0", MaMindaName::e, 0.476813, 1e-4, true);
    omega_problem("R3", "S*_Cr -> Omega", "2(r+sqrt(1+r^2)-1)f0_Cr(r)-1=0", MaMindaName::Cr, 0.485894, 1e-4, true);
    omega_problem("R4", "S*_SG -> Omega", "2tan(r/2)f0_SG(r)-1=0", MaMindaName::SG, 0.799269, 1e-4, false);
    omega_problem("R5", "S*_S -> Omega", "2sinh(r)f0_S(r)-1=0", MaMindaName::S, 0.531721, 1e-4, false);

    // closed forms straight from the printed equations
    out.push_back({"R6", "S*_wp -> Omega", "2r^2 exp(e^r+r-1)-1=0",
                   [](double r) { return 2.0 * r * r * exp(exp(r) + r - 1.0) - 1.0; }, 0.05, 0.95, 0.43384,
                   "reference", 1e-4, true, detail::omega_sharpness(MaMindaName::wp), 0.5, MaMindaName::wp});
    omega_problem("R7", "S*_RL -> Omega", "2|phi0(-r)-1|f0_RL(r)-1=0", MaMindaName::RL, 0.768, 5e-3, false);
    out.push_back({"R8", "S*_L -> Omega", "8r(1-sqrt(1-r))exp(2sqrt(1+r)-2)-(1+sqrt(1+r))^2=0",
                   [](double r) {
                       const double s = sqrt(1.0 + r);
                       return 8.0 * r * (1.0 - sqrt(1.0 - r)) * exp(2.0 * s - 2.0) - (1.0 + s) * (1.0 + s);
                   },
                   0.05, 0.95, 0.734453, "reference", 1e-4, false, {}, 0.5, MaMindaName::L});
    out.push_back({"R9", "S*_Ne -> Omega", "2r(r+r^3/3)exp(r-r^3/9)-1=0",
                   [](double r) { return 2.0 * r * (r + r * r * r / 3.0) * exp(r - r * r * r / 9.0) - 1.0; },
                   0.05, 0.95, 0.524752, "reference", 1e-4, false, {}, 0.5, MaMindaName::Ne});
    out.push_back({"R10", "S*_C -> Omega", "2r exp(r^2/3+4r/3)(2r^2/3+4r/3)-1=0",
                   [](double r) {
                       return 2.0 * r * exp(r * r / 3.0 + 4.0 * r / 3.0) * (2.0 * r * r / 3.0 + 4.0 * r / 3.0) - 1.0;
                   },
                   0.05, 0.95, 0.411914, "reference", 1e-4, true, detail::omega_sharpness(MaMindaName::C), 0.5,
                   MaMindaName::C});
    out.push_back({"R11", "S*_e -> G_{1/2,1/2}", "e^r(1+r^2)^2-4(1-r^2)=0",
                   [](double r) { return exp(r) * (1.0 + r * r) * (1.0 + r * r) - 4.0 * (1.0 - r * r); },
                   0.05, 0.95, 0.537561, "reference", 1e-4, false, {}, 1.0, std::nullopt});
    out.push_back({"R12", "S*_L -> G_{1/2,1/2}", "(1+r^2)^2-4(1-r)^{3/2}(1-r^2)=0",
                   [](double r) {
                       return (1.0 + r * r) * (1.0 + r * r) - 4.0 * std::pow(1.0 - r, 1.5) * (1.0 - r * r);
                   },
                   0.05, 0.95, 0.429874, "reference", 1e-4, false, {}, 1.0, std::nullopt});
    out.push_back({"R13", "S*_SG -> G_{1/2,1/2}", "e^r(1+r^2)^2-8(1-r^2)=0",
                   [](double r) { return exp(r) * (1.0 + r * r) * (1.0 + r * r) - 8.0 * (1.0 - r * r); },
                   0.05, 0.95, 0.683447, "reference", 1e-4, false, {}, 1.0, std::nullopt});
    return out;
}

/// Printed forms that the implementation does not follow, with the reason.
struct Erratum {
    std::string id;
    std::string printed;
    std::string implemented;
};

inline std::vector<Erratum> errata() {
    return {
        {"R5", "2 sinh(1) f0(r) - 1 = 0 (root 0.311964, does not reproduce 0.531721)",
         "2 sinh(r) f0_S(r) - 1 = 0"},
        {"R7", "2 (phi0(-r) - 1) f0(r) - 1 = 0 (phi0(-r) - 1 < 0 on (0,1))", "2 |phi0(-r) - 1| f0_RL(r) - 1 = 0"},
        {"R9", "2r (r + r^3/3) exp(r - r^3/9) = 0 (positive on (0,1))", "2r (r + r^3/3) exp(r - r^3/9) - 1 = 0"},
        {"f0_S", "z exp(int sin t / t) = z + z^2/2 + z^3/8 + z^4/144 - 5z^5/1152 (the SG series)",
         "z exp(int sin t / t) = z + z^2 + z^3/2 + z^4/9 - z^5/72 by quadrature"},
        {"incl(iii)", "(1 + sin 1) lambda e < (1 + sin 1)(3 alpha - 1)", "(1 + sin 1) lambda < sin(1)(3 alpha - 1)"},
        {"incl(viii)", "labelled S*_P", "S*_wp (r1 = 1/e)"},
        {"A-root", "A > 0 whenever r < r2 = 0.565244 (0.565244 is the first root of C)",
         "first positive root of A is 0.701363"},
    };
}

}  // namespace gft
