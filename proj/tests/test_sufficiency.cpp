#include <gtest/gtest.h>

#include <random>

#include "gft/class_oracles.hpp"
#include "gft/sufficiency.hpp"
#include "gft/verify.hpp"
#include "oracles.hpp"

using gft::Complex;
using gft::SufficiencyVariant;

namespace {

// smallest positive root from the textbook quadratic formula
double quadratic_oracle(double lambda, double alpha, int n) {
    const double a = (1.0 + n) * (2 * alpha * n - lambda * (n + 1) - n);
    const double b = n * (1 - alpha + n) * (2 * lambda * (n + 1) + n + alpha * n * n);
    const double c = -lambda * n * n * (n + 1 - alpha) * (n + 1 - alpha);
    const double d = std::sqrt(b * b - 4 * a * c);
    double best = INFINITY;
    for (double r : {(-b + d) / (2 * a), (-b - d) / (2 * a)})
        if (r > 0) best = std::min(best, r);
    return best;
}

gft::AnalyticMap constant_g(Complex c) {
    return gft::AnalyticMap::from_jet([c](Complex) { return gft::Jet{c, 0.0, 0.0}; }, gft::Provenance::closed_form);
}

}  // namespace

TEST(Delta, UnivalenceExample) {
    const double d = gft::delta_threshold({0.25, 0.5, 1});
    EXPECT_NEAR(d, 3 * (5 - std::sqrt(21.0)) / 8, 1e-12);
    EXPECT_NEAR(d, 0.156534, 1e-6);
}

TEST(Delta, AlphaZeroLambdaOne) {
    EXPECT_NEAR(gft::delta_threshold({1.0, 0.0, 1}), 2.0 / 3, 1e-14);
    EXPECT_NEAR(quadratic_oracle(1.0, 0.0, 1), 2.0 / 3, 1e-14);
}

TEST(Delta, VanishesWithLambda) {
    double prev = INFINITY;
    for (double l : {1e-1, 1e-3, 1e-6, 1e-9}) {
        const double d = gft::delta_threshold({l, 0.5, 1});
        EXPECT_LT(d, prev);
        prev = d;
    }
    EXPECT_LT(prev, 1e-8);
}

TEST(Delta, DomainErrors) {
    EXPECT_THROW(gft::delta_threshold({0.0, 0.5, 1}), gft::DomainError);
    EXPECT_THROW(gft::delta_threshold({0.2, 1.0, 1}), gft::DomainError);
    EXPECT_THROW(gft::delta_threshold({0.2, -0.1, 1}), gft::DomainError);
    EXPECT_THROW(gft::delta_threshold({0.2, 0.5, 0}), gft::DomainError);
}

TEST(Delta, QuadraticOracleAgreesOnRandomSamples) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> lam(1e-3, 5.0), alp(0.0, 0.999);
    std::uniform_int_distribution<int> nn(1, 8);
    for (int i = 0; i < 100; ++i) {
        const gft::ClassParams p{lam(rng), alp(rng), nn(rng)};
        const double d = gft::delta_threshold(p);
        EXPECT_NEAR(d, quadratic_oracle(p.lambda, p.alpha, p.n), 1e-10 * std::max(1.0, d));
        EXPECT_LT(d * (p.n + 1) / (p.n * (p.n + 1 - p.alpha)), 1.0);
        const auto q = gft::delta_quadratic(p);
        const double scale = std::abs(q.a) * d * d + std::abs(q.b) * d + std::abs(q.c);
        EXPECT_LT(std::abs(q(d)) / scale, 1e-10);
    }
}

TEST(Thm2, Examples) {
    const double d = gft::delta_threshold({0.25, 0.5, 1});
    EXPECT_NEAR(gft::thm2_threshold({0.25, 0.5, 1}), d * (2 * 0.5) / (0.5 + 1), 1e-15);
    EXPECT_NEAR(gft::thm2_threshold({0.25, 0.5, 1}), 0.104356, 1e-6);
    EXPECT_DOUBLE_EQ(gft::thm2_threshold({0.7, 0.0, 2}), gft::delta_threshold({0.7, 0.0, 2}));
    EXPECT_NEAR(gft::thm2_threshold({1.0, 0.0, 1}), 2.0 / 3, 1e-14);
}

TEST(Thm2, StrictlyBelowThm1ForPositiveAlpha) {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> lam(1e-3, 5.0), alp(1e-3, 0.999);
    std::uniform_int_distribution<int> nn(1, 8);
    for (int i = 0; i < 200; ++i) {
        const gft::ClassParams p{lam(rng), alp(rng), nn(rng)};
        EXPECT_LT(gft::thm2_threshold(p), gft::delta_threshold(p));
    }
}

TEST(DoubleIntegral, ZeroPerturbation) {
    const auto f = gft::build_double_integral_fn(constant_g(0.0), {0.25, 0.5, 1}, SufficiencyVariant::thm1);
    for (Complex z : {Complex(0.3), Complex(-0.2, 0.9)}) EXPECT_NEAR(std::abs(f(z) - z), 0.0, 1e-16);
}

TEST(DoubleIntegral, ConstantG) {
    const double c = 0.07, alpha = 0.5;
    const auto f = gft::build_double_integral_fn(constant_g(c), {0.25, alpha, 1}, SufficiencyVariant::thm1);
    const auto s = gft::recover_series(f, 4);
    EXPECT_NEAR(s.coeffs()[1].real(), c / (1 * (2 - alpha)), 1e-13);
    EXPECT_NEAR(s.coeffs()[1].real(), 0.046667, 1e-6);
    EXPECT_NEAR(std::abs(s.coeffs()[2]), 0.0, 1e-13);
}

TEST(DoubleIntegral, MonomialG) {
    const double c = 0.1;
    const auto g = gft::polynomial_map(gft::Polynomial({0.0, c}));
    const auto f = gft::build_double_integral_fn(g, {0.25, 0.5, 1}, SufficiencyVariant::thm1);
    const auto s = gft::recover_series(f, 4);
    EXPECT_NEAR(std::abs(s.coeffs()[1]), 0.0, 1e-13);
    EXPECT_NEAR(s.coeffs()[2].real(), c / 5, 1e-13);
}

TEST(DoubleIntegral, MonomialCoefficientsBothVariants) {
    // z^k term of g contributes 1/((k + e1 + 1)(k + e2 + 1)) z^{n+1+k}
    const gft::ClassParams p{0.3, 0.4, 2};
    for (auto v : {SufficiencyVariant::thm1, SufficiencyVariant::thm2}) {
        const auto [e1, e2] = gft::double_integral_exponents(p, v);
        for (int k = 0; k <= 3; ++k) {
            std::vector<Complex> gc(k + 1);
            gc[k] = 1.0;
            const auto f = gft::build_double_integral_fn(gft::polynomial_map(gft::Polynomial(gc)), p, v);
            const auto s = gft::recover_series(f, 8, 2);
            EXPECT_NEAR(s.coeffs()[p.n + k].real(), 1.0 / ((k + e1 + 1) * (k + e2 + 1)), 1e-12)
                << gft::to_string(v) << " k=" << k;
        }
    }
}

TEST(DoubleIntegral, DerivativesMatchFiniteDifferences) {
    const auto g = gft::polynomial_map(gft::Polynomial({0.03, Complex(0.0, 0.02), -0.01}));
    for (auto v : {SufficiencyVariant::thm1, SufficiencyVariant::thm2}) {
        const auto f = gft::build_double_integral_fn(g, {0.25, 0.5, 1}, v);
        for (Complex z : {Complex(0.4, 0.3), Complex(-0.8, 0.1)}) {
            EXPECT_NEAR(std::abs(f.deriv1(z) - oracle::central_diff([&](Complex w) { return f(w); }, z)), 0.0, 1e-8);
            EXPECT_NEAR(std::abs(f.deriv2(z) - oracle::central_diff([&](Complex w) { return f.deriv1(w); }, z)), 0.0,
                        1e-7);
        }
    }
}

TEST(SufficientCondition, IdentitySatisfied) {
    const gft::DiskGrid grid;
    for (auto v : {SufficiencyVariant::thm1, SufficiencyVariant::thm2}) {
        const auto rep = gft::check_sufficient_condition(gft::identity_map(), {0.25, 0.5, 1}, v, grid);
        EXPECT_TRUE(rep.satisfied);
        EXPECT_LT(rep.sup_value, 1e-15);
    }
}

TEST(SufficientCondition, PipelineFromConstant) {
    const gft::ClassParams p{0.25, 0.5, 1};
    const double d = gft::delta_threshold(p);
    const auto f = gft::build_double_integral_fn(constant_g(0.9 * d), p, SufficiencyVariant::thm1);
    const gft::DiskGrid grid;
    const auto rep = gft::check_sufficient_condition(f, p, SufficiencyVariant::thm1, grid);
    EXPECT_TRUE(rep.satisfied);
    EXPECT_NEAR(rep.sup_value, 0.9 * d * grid.guard, 1e-12);
    EXPECT_TRUE(gft::in_G(f, p, grid).satisfied);
}

TEST(SufficientCondition, OvershootFails) {
    const gft::ClassParams p{0.25, 0.5, 1};
    const double d = gft::delta_threshold(p);
    const auto f = gft::series_map(gft::PowerSeries({1.0, d * 2 / (p.n * (p.n + 1 - p.alpha))}));
    const auto rep = gft::check_sufficient_condition(f, p, SufficiencyVariant::thm1, {});
    EXPECT_FALSE(rep.satisfied);
    EXPECT_GT(rep.sup_value, d);
}

TEST(SufficientCondition, Thm2PipelineSatisfied) {
    const gft::ClassParams p{0.25, 0.5, 1};
    const double t = gft::thm2_threshold(p);
    const auto g = gft::polynomial_map(gft::Polynomial({0.5 * t, Complex(0.0, 0.3 * t)}));
    const auto f = gft::build_double_integral_fn(g, p, SufficiencyVariant::thm2);
    const auto rep = gft::check_sufficient_condition(f, p, SufficiencyVariant::thm2, {});
    EXPECT_TRUE(rep.satisfied);
    EXPECT_LT(rep.sup_value, 0.8 * t + 1e-12);
    EXPECT_TRUE(gft::in_G(f, p, {}).satisfied);
}

TEST(RoundTrip, RandomMembersOfThm1Construction) {
    for (const auto& row : gft::sufficiency_suite(7)) EXPECT_TRUE(row.passed) << row.name << " " << row.detail;
}

TEST(RoundTrip, SeriesRecoveredFromPipelineIsNormalized) {
    std::mt19937_64 rng(23);
    for (int n : {1, 2, 3}) {
        const auto s = gft::pipeline_member(rng, {0.4, 0.6, n});
        EXPECT_EQ(s.order_n(), n);
        EXPECT_EQ(s.coeffs()[0], Complex(1.0));
        for (int k = 2; k <= n; ++k) EXPECT_EQ(s.coeffs()[k - 1], Complex(0.0));
    }
}
