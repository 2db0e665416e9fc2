// One line per acceptance criterion; exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "gft/gft.hpp"
#include "oracles.hpp"

namespace {

using gft::Complex;
using gft::MaMindaName;

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s | %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
    if (!ok) ++failures;
}

std::string num(double x, int digits = 9) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

const gft::RadiusRow* row(const gft::VerifyReport& rep, const std::string& id) {
    for (const auto& r : rep.radii)
        if (r.id == id) return &r;
    return nullptr;
}

void radius_reproduction(const gft::VerifyReport& rep) {
    const double expected[] = {0.430496, 0.476813, 0.485894, 0.799269, 0.531721, 0.43384, 0.768,
                               0.734453, 0.524752, 0.411914, 0.537561, 0.429874, 0.683447};
    int matched = 0;
    double worst = 0.0;
    for (int i = 0; i < 13; ++i) {
        const auto* r = row(rep, "R" + std::to_string(i + 1));
        const double tol = i == 6 ? 5e-3 : 1e-4;
        if (r && r->expected == expected[i] && std::abs(r->computed - expected[i]) < tol) ++matched;
        if (r) worst = std::max(worst, std::abs(r->computed - expected[i]) / tol);
    }
    report(1, "radius reproduction", matched == 13 && rep.seconds < 10.0,
           std::to_string(matched) + "/13 within tolerance, worst |diff|/tol " + num(worst, 3) + ", runtime " +
               num(rep.seconds, 3) + " s");
}

void sharpness() {
    const auto cat = gft::radius_catalog();
    std::string detail;
    bool ok = true;
    for (const std::string id : {"R6", "R10", "R2", "R3"}) {
        for (const auto& p : cat) {
            if (p.id != id) continue;
            const double r0 = gft::smallest_positive_root(p.psi).root;
            const auto f0 = gft::maminda(*p.empirical_class).f0();
            const double s =
                gft::sup_on_circle([&](Complex z) { return gft::omega_functional(f0, z); }, r0, 4096).value;
            ok = ok && std::abs(s - 0.5) < 1e-4;
            detail += id + " sup " + num(s, 10) + "; ";
        }
    }
    report(2, "sharpness of wp, C, e, Cr extremals", ok, detail);
}

void delta_check() {
    const gft::ClassParams p{0.25, 0.5, 1};
    const double d = gft::delta_threshold(p);
    const double ref = 3.0 * (5.0 - std::sqrt(21.0)) / 8.0;
    const auto q = gft::delta_quadratic(p);
    const double resid = std::abs(q(d)) / (std::abs(q.a) * d * d + std::abs(q.b) * d + std::abs(q.c));
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> lam(1e-3, 5.0), alp(0.0, 0.999);
    std::uniform_int_distribution<int> nn(1, 8);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const gft::ClassParams s{lam(rng), alp(rng), nn(rng)};
        const auto qs = gft::delta_quadratic(s);
        const double disc = std::sqrt(qs.b * qs.b - 4 * qs.a * qs.c);
        double best = INFINITY;
        for (double r : {(-qs.b + disc) / (2 * qs.a), (-qs.b - disc) / (2 * qs.a)})
            if (r > 0) best = std::min(best, r);
        worst = std::max(worst, std::abs(gft::delta_threshold(s) - best));
    }
    report(3, "delta threshold", std::abs(d - ref) < 1e-12 && resid < 1e-10 && worst < 1e-10,
           "delta " + num(d, 15) + " vs " + num(ref, 15) + ", residual " + num(resid, 3) + ", oracle max diff " +
               num(worst, 3));
}

void structural_coefficients() {
    const double e_ref[] = {1.0, 1.0, 3.0 / 4, 17.0 / 36, 19.0 / 72};
    const double cr_ref[] = {1.0, 1.0, 3.0 / 4, 5.0 / 12, 1.0 / 6};
    double worst = 0.0;
    for (auto [name, ref] : {std::pair{MaMindaName::e, e_ref}, std::pair{MaMindaName::Cr, cr_ref}}) {
        const auto f0 = gft::structural_extremal(gft::maminda(name).phi);
        const auto c = gft::cauchy_coefficients(f0, 6, 0.5, 64);
        for (int k = 0; k < 5; ++k) worst = std::max(worst, std::abs(c[k + 1] - ref[k]));
    }
    report(4, "structural-formula coefficients (e, Cr)", worst < 1e-8, "max coefficient error " + num(worst, 3));
}

void bounds(std::uint64_t seed) {
    const auto rows = gft::bounds_suite(seed);
    const auto& ineq = rows[0];
    const auto& phi = rows[2];
    const double disc_root = gft::smallest_positive_root([](double r) { return gft::abc_discriminant(r); }).root;
    const double a_root = gft::smallest_positive_root([](double r) { return gft::abc_coeffs(r).A; }).root;
    const double c_root = gft::smallest_positive_root([](double r) { return gft::abc_coeffs(r).C; }).root;
    const bool ok = ineq.passed && phi.passed && std::abs(disc_root - 0.430496) < 1e-4 &&
                    std::abs(a_root - 0.565244) < 1e-4;
    report(5, "bounds suite", ok,
           "violations " + num(ineq.value, 3) + ", min Phi " + num(phi.value, 6) + ", root(B^2-4AC) " +
               num(disc_root, 7) + ", root(A) " + num(a_root, 7) + " (expected 0.565244; root(C) = " +
               num(c_root, 7) + ")");
}

void inclusion(std::uint64_t seed) {
    const auto rows = gft::inclusion_suite(seed);
    report(6, "inclusion/oracle consistency", rows[0].passed && rows[1].passed,
           "omega counterexamples " + num(rows[0].value, 3) + ", disk counterexamples " + num(rows[1].value, 3) +
               " over " + rows[1].detail);
}

void subordination() {
    const double lambda = 0.25, alpha = 0.5, c = lambda / (3 * alpha - 1);
    const auto f = gft::mobius_star(c);
    double worst = 0.0;
    for (int i = 1; i <= 9; ++i) {
        const double r = 0.1 * i;
        const double s = gft::sup_on_circle([&](Complex z) { return gft::g_functional(f, z, alpha); }, r, 4096).value;
        worst = std::max(worst, std::abs(s - r / 4));
    }
    report(7, "subordination sharpness", worst < 1e-9, "max |sup - r/4| " + num(worst, 3));
}

void errata() {
    const auto s_phi = gft::maminda(MaMindaName::S).phi;
    auto f0_s = [&](double r) { return gft::structural_f0(s_phi, r).real(); };
    auto r5 = [&](double r) { return 2 * std::sinh(r) * f0_s(r) - 1; };
    auto r5_printed = [&](double r) { return 2 * std::sinh(1.0) * f0_s(r) - 1; };
    auto r9 = [](double r) { return 2 * r * (r + r * r * r / 3) * std::exp(r - r * r * r / 9) - 1; };
    auto r9_printed = [](double r) { return 2 * r * (r + r * r * r / 3) * std::exp(r - r * r * r / 9); };
    const double c5 = 0.531721, c9 = 0.524752, h = 5e-3;
    const bool impl5 = r5(c5 - h) * r5(c5 + h) < 0;
    const bool impl9 = r9(c9 - h) * r9(c9 + h) < 0;
    const bool printed5 = r5_printed(c5 - h) * r5_printed(c5 + h) > 0;
    bool printed9 = true;
    for (int i = 1; i < 1000; ++i) printed9 = printed9 && r9_printed(i * 1e-3) > 0;
    report(8, "errata adjudication", impl5 && impl9 && printed5 && printed9,
           std::string("R5 implemented brackets ") + (impl5 ? "yes" : "no") + ", printed brackets " +
               (printed5 ? "no" : "yes") + "; R9 implemented brackets " + (impl9 ? "yes" : "no") +
               ", printed positive on (0,1) " + (printed9 ? "yes" : "no"));
}

}  // namespace

int main() {
    const std::uint64_t seed = 7;
    gft::VerifyOptions opt;
    opt.seed = seed;
    const auto rep = gft::verify_all(opt);

    radius_reproduction(rep);
    sharpness();
    delta_check();
    structural_coefficients();
    bounds(seed);
    inclusion(seed);
    subordination();
    errata();

    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
