#pragma once

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gft/analytic.hpp"
#include "gft/class_oracles.hpp"
#include "gft/maminda.hpp"
#include "gft/radius.hpp"
#include "gft/schwarz.hpp"
#include "gft/sufficiency.hpp"

namespace gft {

/// One line of a verification report.
struct CheckRow {
    std::string suite;
    std::string name;
    bool passed = false;
    double value = 0.0;
    double target = 0.0;
    std::string detail;
};

struct RadiusRow {
    std::string id;
    std::string description;
    std::string equation;
    double computed = 0.0;
    double expected = 0.0;
    double diff = 0.0;
    double tolerance = 0.0;
    double residual = 0.0;
    int iterations = 0;
    bool within = false;
    bool sharp = false;
    /// |sup |z f0' - f0| at the computed root - threshold|; NaN without a sharpness check.
    double sharpness_residual = std::numeric_limits<double>::quiet_NaN();
    bool sharpness_ok = true;
    /// Independent radius from dist_max * growth_M; NaN when the class has no such profile.
    double empirical = std::numeric_limits<double>::quiet_NaN();
};

struct VerifyOptions {
    double root_tol = 1e-12;
    double scan_step = 0.005;
    /// Overrides every problem's comparison tolerance when positive.
    double compare_tol = 0.0;
    double sharpness_tol = 1e-4;
    std::uint64_t seed = 7;
    int angles = 4096;
    double guard = 0.999;
};

inline RadiusRow solve_problem(const RadiusProblem& p, const VerifyOptions& opt) {
    RadiusRow row;
    row.id = p.id;
    row.description = p.description;
    row.equation = p.equation;
    const auto res = smallest_positive_root(p.psi, opt.scan_step, opt.root_tol);
    row.computed = res.root;
    row.residual = std::abs(p.psi(res.root));
    row.iterations = res.iterations;
    row.expected = p.expected;
    row.diff = std::abs(res.root - p.expected);
    row.tolerance = opt.compare_tol > 0.0 ? opt.compare_tol : p.tolerance;
    row.within = row.diff < row.tolerance;
    row.sharp = p.sharp;
    if (p.sharp && p.sharpness_check) {
        row.sharpness_residual = std::abs(p.sharpness_check(res.root) - p.sharpness_threshold);
        row.sharpness_ok = row.sharpness_residual < opt.sharpness_tol;
    }
    if (p.empirical_class) {
        const MaMindaName name = *p.empirical_class;
        row.empirical = empirical_radius(0.5, [name](double r) { return dist_max(name, r) * growth_M(name, r); },
                                         1e-12)
                            .radius;
    }
    return row;
}

inline std::vector<RadiusRow> solve_radius_catalog(const VerifyOptions& opt = {}) {
    std::vector<RadiusRow> rows;
    for (const auto& p : radius_catalog()) rows.push_back(solve_problem(p, opt));
    return rows;
}

namespace detail {

inline std::string short_num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Seeded sample families shared by the property suites

/// Polynomial g of degree <= max_degree with random complex coefficients, rescaled so that
/// the coefficient l1 norm (an upper bound for sup |g| on D) equals `bound`.
inline Polynomial random_bounded_polynomial(std::mt19937_64& rng, int max_degree, double bound) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::normal_distribution<double> nd(0.0, 1.0);
    const int d = deg(rng);
    std::vector<Complex> c(d + 1);
    for (auto& x : c) x = {nd(rng), nd(rng)};
    Polynomial p(std::move(c));
    return p.scaled(bound / p.l1_norm());
}

/// A member of G_{lambda,alpha} built through the thm1 double integral from a random g with
/// sup |g| <= 0.9 delta, returned as its recovered power series.
inline PowerSeries pipeline_member(std::mt19937_64& rng, const ClassParams& p, int max_degree = 3) {
    const double delta = delta_threshold(p);
    const Polynomial g = random_bounded_polynomial(rng, max_degree, 0.9 * delta);
    const AnalyticMap f = build_double_integral_fn(polynomial_map(g), p, SufficiencyVariant::thm1);
    return recover_series(f, static_cast<std::size_t>(p.n + 1) + g.size(), p.n);
}

inline std::vector<SchwarzSample> schwarz_samples(std::mt19937_64& rng, int count = 50) {
    std::vector<SchwarzSample> out;
    std::uniform_real_distribution<double> modulus(0.0, 0.95), angle(0.0, 2.0 * std::numbers::pi);
    for (int k = 1; k <= 10 && static_cast<int>(out.size()) < count; ++k) out.push_back(schwarz_power(k));
    for (int i = 0; i < 10 && static_cast<int>(out.size()) < count; ++i)
        out.push_back(schwarz_scaled_atom(std::polar(modulus(rng) / 0.95, angle(rng))));
    while (static_cast<int>(out.size()) < count) {
        const Complex a1 = std::polar(modulus(rng), angle(rng));
        const Complex a2 = std::polar(modulus(rng), angle(rng));
        out.push_back(schwarz_blaschke(a1, a2));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Property suites

/// Schwarz-function inequalities, Dieudonne continuity, Phi positivity and the A/B/C roots.
inline std::vector<CheckRow> bounds_suite(std::uint64_t seed) {
    std::vector<CheckRow> rows;
    std::mt19937_64 rng(seed);
    const auto samples = schwarz_samples(rng, 50);
    std::uniform_real_distribution<double> rad(0.02, 0.95), angle(0.0, 2.0 * std::numbers::pi);
    int violations = 0;
    double worst = INFINITY;
    for (const auto& s : samples) {
        for (int i = 0; i < 100; ++i) {
            const Complex z = std::polar(rad(rng), angle(rng));
            const double r = std::abs(z);
            const Jet w = s.omega.jet(z);
            const double m = std::min(std::abs(w.value), r);
            const double d1 = std::abs(w.d1);
            const double slacks[] = {
                schwarz_pick_bound(m, r) - d1,
                dieudonne_deriv_bound(r) - d1,
                d1 - dieudonne_lower(m, r),
                dieudonne_crescent(m, r) - std::abs(z * w.d1 - w.value),
                r - std::abs(w.value),
            };
            for (double sl : slacks) {
                worst = std::min(worst, sl);
                if (sl < -1e-9) ++violations;
            }
        }
    }
    rows.push_back({"bounds", "schwarz inequalities (50 samples x 100 points)", violations == 0,
                    static_cast<double>(violations), 0.0, "min slack " + detail::short_num(worst)});

    const double rs = std::numbers::sqrt2 - 1.0;
    const double q = 1.0 + rs * rs;
    const double jump = std::abs(q * q / (4.0 * rs * (1.0 - rs * rs)) - 1.0);
    rows.push_back({"bounds", "dieudonne bound continuous at sqrt2-1", jump < 1e-12, jump, 0.0, ""});

    double phi_min = INFINITY;
    for (int i = 1; i <= 430; ++i) {
        const double r = i * 1e-3;
        for (int j = 0; j <= 200; ++j) phi_min = std::min(phi_min, capital_phi(r * j / 200.0, r));
    }
    rows.push_back({"bounds", "Phi(w, r) > 0 for 0 <= w <= r < 0.43", phi_min > 0.0, phi_min, 0.0, ""});

    const auto disc = smallest_positive_root([](double r) { return abc_discriminant(r); }, 0.001);
    rows.push_back({"bounds", "first positive root of B^2-4AC", std::abs(disc.root - 0.430496) < 1e-4, disc.root,
                    0.430496, ""});
    double a_min = INFINITY;
    for (int i = 0; i <= 1000; ++i) a_min = std::min(a_min, abc_coeffs(0.565244 * i / 1000.0).A);
    rows.push_back({"bounds", "A > 0 on [0, 0.565244]", a_min > 0.0, a_min, 0.0, ""});
    const auto croot = smallest_positive_root([](double r) { return abc_coeffs(r).C; }, 0.001);
    rows.push_back({"bounds", "first positive root of C", std::abs(croot.root - 0.565244) < 1e-4, croot.root,
                    0.565244, "the value printed for A"});
    const double r3 = std::pow(1.0 / 3.0, 0.25);
    rows.push_back({"bounds", "w^3 coefficient vanishes at (1/3)^(1/4)", std::abs(1.0 - 3.0 * std::pow(r3, 4)) < 1e-14,
                    r3, 0.759836, ""});
    return rows;
}

/// Threshold algebra and the thm1 double-integral round trip.
inline std::vector<CheckRow> sufficiency_suite(std::uint64_t seed, const DiskGrid& grid = {}) {
    std::vector<CheckRow> rows;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> lam(0.01, 2.0), alp(0.0, 0.99);
    std::uniform_int_distribution<int> nn(1, 5);

    int bad_quadratic = 0, bad_order = 0;
    for (int i = 0; i < 100; ++i) {
        const ClassParams p{lam(rng), alp(rng), nn(rng)};
        const double d = delta_threshold(p);
        const auto qd = delta_quadratic(p);
        const double disc = qd.b * qd.b - 4.0 * qd.a * qd.c;
        const double r1 = (-qd.b + std::sqrt(disc)) / (2.0 * qd.a);
        const double r2 = (-qd.b - std::sqrt(disc)) / (2.0 * qd.a);
        double smallest = INFINITY;
        for (double x : {r1, r2})
            if (x > 0.0) smallest = std::min(smallest, x);
        if (!(std::abs(smallest - d) < 1e-10 * std::max(1.0, d))) ++bad_quadratic;
        if (p.alpha > 0.0 && !(thm2_threshold(p) < d)) ++bad_order;
    }
    rows.push_back({"sufficiency", "delta closed form vs quadratic formula (100 samples)", bad_quadratic == 0,
                    static_cast<double>(bad_quadratic), 0.0, ""});
    rows.push_back({"sufficiency", "thm2 threshold < thm1 threshold", bad_order == 0, static_cast<double>(bad_order),
                    0.0, ""});

    std::uniform_real_distribution<double> lam_g(0.05, 1.0), alp_g(0.05, 0.95);
    int failures = 0;
    std::string first_failure;
    for (int i = 0; i < 20; ++i) {
        const ClassParams p{lam_g(rng), alp_g(rng), 1 + i % 2};
        const double delta = delta_threshold(p);
        const AnalyticMap f = series_map(pipeline_member(rng, p));
        const auto cond = check_sufficient_condition(f, p, SufficiencyVariant::thm1, grid);
        const auto member = in_G(f, p, grid);
        const double k = delta / (p.n * (p.n + 1.0 - p.alpha));
        const auto ratio = sup_on_circle([&](Complex z) { return std::abs(f(z) / z); }, grid.guard, grid);
        const auto ratio_min = sup_on_circle([&](Complex z) { return -std::abs(f(z) / z); }, grid.guard, grid);
        const bool ok = cond.satisfied && member.satisfied && ratio.value < 1.0 + k && -ratio_min.value > 1.0 - k;
        if (!ok) {
            ++failures;
            if (first_failure.empty())
                first_failure = "lambda=" + detail::short_num(p.lambda) + " alpha=" + detail::short_num(p.alpha);
        }
    }
    rows.push_back({"sufficiency", "thm1 round trip: condition, |f/z| bounds, in_G (20 samples)", failures == 0,
                    static_cast<double>(failures), 0.0, first_failure});
    return rows;
}

/// Inclusion predicates against grid oracles, plus sharpness of the subordination radius.
inline std::vector<CheckRow> inclusion_suite(std::uint64_t seed, const DiskGrid& grid = {}) {
    std::vector<CheckRow> rows;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> alp(0.34, 0.99), frac(0.02, 0.98);

    int omega_fail = 0;
    for (int i = 0; i < 20; ++i) {
        const double alpha = alp(rng);
        const double lambda = frac(rng) * (2.0 - std::sqrt(3.0)) * (3.0 * alpha - 1.0);
        if (!inclusion_G_in_Omega(lambda, alpha)) {
            ++omega_fail;
            continue;
        }
        const AnalyticMap f = series_map(pipeline_member(rng, {lambda, alpha, 1}));
        if (!in_omega(f, grid).satisfied) ++omega_fail;
        if (!subordination_disk_test(f, lambda / (3.0 * alpha - 1.0), grid).satisfied) ++omega_fail;
    }
    rows.push_back({"inclusion", "G in Omega predicate vs in_omega / subordination oracle (20 samples)",
                    omega_fail == 0, static_cast<double>(omega_fail), 0.0, ""});

    const double lambda = 0.05, alpha = 0.9;
    int disk_fail = 0, checked = 0;
    const auto table = inclusion_table(lambda, alpha);
    for (int i = 0; i < 20; ++i) {
        const AnalyticMap f = series_map(pipeline_member(rng, {lambda, alpha, 1}));
        for (const auto& row : table) {
            if (!row.included) continue;
            ++checked;
            if (!in_sstar_disk(f, row.target, grid).satisfied) ++disk_fail;
        }
    }
    rows.push_back({"inclusion", "table relations at (0.05, 0.9) vs |zf'/f - 1| < r1", disk_fail == 0 && checked > 0,
                    static_cast<double>(disk_fail), 0.0, std::to_string(checked) + " member/class pairs"});

    double worst = 0.0;
    const double c = 0.5;
    const AnalyticMap ext = mobius_star(c);
    for (int i = 1; i <= 9; ++i) {
        const double r = 0.1 * i;
        const double s = sup_on_circle([&](Complex z) { return g_functional(ext, z, 0.5); }, r, grid).value;
        worst = std::max(worst, std::abs(s - 0.25 * r));
    }
    rows.push_back({"inclusion", "g-functional of z/(1-cz) equals lambda r (c = 1/2)", worst < 1e-9, worst, 0.0, ""});
    return rows;
}

struct VerifyReport {
    std::vector<RadiusRow> radii;
    std::vector<CheckRow> checks;
    double seconds = 0.0;

    bool all_passed() const {
        for (const auto& r : radii)
            if (!r.within || !r.sharpness_ok) return false;
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

enum class Suite { radii, bounds, sufficiency, inclusion, all };

inline VerifyReport verify_all(const VerifyOptions& opt = {}, Suite suite = Suite::all) {
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    DiskGrid grid;
    grid.angular = opt.angles;
    grid.guard = opt.guard;
    auto append = [&](std::vector<CheckRow> rows) {
        rep.checks.insert(rep.checks.end(), rows.begin(), rows.end());
    };
    if (suite == Suite::radii || suite == Suite::all) rep.radii = solve_radius_catalog(opt);
    if (suite == Suite::bounds || suite == Suite::all) append(bounds_suite(opt.seed));
    if (suite == Suite::sufficiency || suite == Suite::all) append(sufficiency_suite(opt.seed, grid));
    if (suite == Suite::inclusion || suite == Suite::all) append(inclusion_suite(opt.seed, grid));
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace gft
