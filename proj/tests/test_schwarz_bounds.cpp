#include <gtest/gtest.h>

#include <random>

#include <Eigen/Dense>

#include "gft/schwarz.hpp"
#include "gft/verify.hpp"
#include "oracles.hpp"

using gft::Complex;

TEST(SchwarzPick, Examples) {
    for (double r : {0.1, 0.5, 0.9}) EXPECT_DOUBLE_EQ(gft::schwarz_pick_bound(r, r), 1.0);
    EXPECT_NEAR(gft::schwarz_pick_bound(0.25, 0.5), 1.25, 1e-15);
    const auto sq = gft::schwarz_power(2);
    EXPECT_NEAR(std::abs(sq.omega.deriv1(0.5)), 1.0, 1e-15);
    EXPECT_LE(std::abs(sq.omega.deriv1(0.5)), gft::schwarz_pick_bound(0.25, 0.5));
    EXPECT_THROW(gft::schwarz_pick_bound(0.5, 1.0), gft::DomainError);
}

TEST(Dieudonne, DerivativeBound) {
    EXPECT_EQ(gft::dieudonne_deriv_bound(0.2), 1.0);
    const double rs = std::numbers::sqrt2 - 1;
    const double q = 1 + rs * rs;
    EXPECT_NEAR(q * q / (4 * rs * (1 - rs * rs)), 1.0, 1e-12);
    EXPECT_NEAR(gft::dieudonne_deriv_bound(std::nextafter(rs, 1.0)), 1.0, 1e-12);
    EXPECT_NEAR(gft::dieudonne_deriv_bound(0.6), 1.8496 / 1.536, 1e-15);
    EXPECT_NEAR(gft::dieudonne_deriv_bound(0.6), 1.204167, 1e-6);
}

TEST(Dieudonne, LowerBound) {
    EXPECT_EQ(gft::dieudonne_lower(0.25, 0.5), 0.0);
    EXPECT_NEAR(gft::dieudonne_lower(0.5, 0.5), 1.0, 1e-15);
    EXPECT_NEAR(gft::dieudonne_lower(0.3, 0.3), (0.3 - 0.09) * 1.3 / (0.3 * 0.91), 1e-15);
    EXPECT_LE(gft::dieudonne_lower(0.3, 0.3), 1.0);
    EXPECT_THROW(gft::dieudonne_lower(0.0, 0.0), gft::DomainError);
    EXPECT_THROW(gft::dieudonne_lower(0.6, 0.5), gft::DomainError);
}

TEST(Dieudonne, Crescent) {
    EXPECT_EQ(gft::dieudonne_crescent(0.4, 0.4), 0.0);
    EXPECT_NEAR(gft::dieudonne_crescent(0.1, 0.5), 0.32, 1e-15);
    const auto sq = gft::schwarz_power(2);
    const Complex z = 0.5;
    const double lhs = std::abs(z * sq.omega.deriv1(z) - sq.omega(z));
    EXPECT_NEAR(lhs, 0.25, 1e-15);
    EXPECT_NEAR(gft::dieudonne_crescent(0.25, 0.5), 0.25, 1e-15);
}

TEST(Abc, AtZero) {
    const auto [A, B, C] = gft::abc_coeffs(0.0);
    EXPECT_EQ(A, 10.0);
    EXPECT_EQ(B, -8.0);
    EXPECT_EQ(C, 4.0);
    EXPECT_EQ(gft::abc_discriminant(0.0), -96.0);
}

TEST(Abc, DiscriminantRoot) {
    const double r = oracle::first_root([](double x) { return gft::abc_discriminant(x); });
    EXPECT_NEAR(r, 0.430496, 1e-6);
}

TEST(Abc, DiscriminantEqualsMinusRadiusPolynomial) {
    for (int i = 0; i <= 20; ++i) {
        const double r = 0.045 * i;
        EXPECT_NEAR(gft::abc_discriminant(r), -gft::omega_to_g_polynomial(r), 1e-10);
    }
}

TEST(Abc, RootsOfAAndC) {
    // A stays positive well past 0.565244; that value is where C changes sign.
    const double a_root = oracle::first_root([](double x) { return gft::abc_coeffs(x).A; });
    const double c_root = oracle::first_root([](double x) { return gft::abc_coeffs(x).C; });
    EXPECT_NEAR(a_root, 0.701363, 1e-6);
    EXPECT_NEAR(c_root, 0.565244, 1e-6);
}

TEST(CapitalPhi, Examples) {
    EXPECT_EQ(gft::capital_phi(0.0, 0.0), 4.0);
    for (int i = 1; i < 430; ++i) {
        const double r = i * 1e-3;
        for (int j = 0; j <= 50; ++j) EXPECT_GT(gft::capital_phi(r * j / 50, r), 0.0);
    }
    EXPECT_THROW(gft::capital_phi(0.6, 0.5), gft::DomainError);
}

TEST(CapitalPhi, CubicCoefficientSignChange) {
    const double r3 = std::pow(1.0 / 3, 0.25);
    EXPECT_NEAR(r3, 0.759836, 1e-6);
    // recover the w^3 coefficient by interpolating Phi at six points of [0, r]
    auto cubic = [](double r) {
        Eigen::Matrix<double, 6, 6> V;
        Eigen::Matrix<double, 6, 1> y;
        for (int k = 0; k < 6; ++k) {
            const double w = r * k / 5.0;
            for (int j = 0; j < 6; ++j) V(k, j) = std::pow(w, j);
            y(k) = gft::capital_phi(w, r);
        }
        return Eigen::Matrix<double, 6, 1>(V.fullPivLu().solve(y))(3);
    };
    EXPECT_NEAR(cubic(0.5), 1 - 3 * std::pow(0.5, 4), 1e-8);
    EXPECT_GT(cubic(r3 - 1e-3), 0.0);
    EXPECT_LT(cubic(r3 + 1e-3), 0.0);
}

TEST(CapitalPhi, ExpandsToQuadraticPlusHigherTerms) {
    // Coefficient-level identity: Phi - (w^5 + (r^3 - 3r^2 - r + 5) w^4 + (1 - 3r^4) w^3) = A w^2 + B w + C
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 0.99);
    for (int i = 0; i < 200; ++i) {
        const double r = u(rng), w = u(rng) * r;
        const auto [A, B, C] = gft::abc_coeffs(r);
        const double high = std::pow(w, 5) + (r * r * r - 3 * r * r - r + 5) * std::pow(w, 4) +
                            (1 - 3 * std::pow(r, 4)) * w * w * w;
        EXPECT_NEAR(gft::capital_phi(w, r), high + A * w * w + B * w + C, 1e-12);
    }
}

TEST(CapitalPhi, EquivalentToRationalBoundBelowOne) {
    // Phi = (1 - r^2) D^2 - N, with N/((1-r^2) D^2) the bound assembled from the inequalities
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.01, 0.95);
    for (int i = 0; i < 200; ++i) {
        const double r = u(rng), w = u(rng) * r;
        const double D = 2 * r * r * w - 3 * r * r + w * w - 2 * w + 2;
        const double bound = gft::omega_to_g_bound(w, r);
        EXPECT_NEAR(gft::capital_phi(w, r), (1 - r * r) * D * D * (1 - bound), 1e-10);
    }
}

TEST(Samples, SchwarzLemmaOnGrid) {
    std::mt19937_64 rng(5);
    for (const auto& s : gft::schwarz_samples(rng, 50)) {
        EXPECT_NEAR(std::abs(s.omega(0.0)), 0.0, 1e-14) << s.label;
        for (int k = 0; k < 64; ++k) {
            const Complex z = std::polar(0.05 + 0.9 * (k % 8) / 8.0, 0.7 * k);
            EXPECT_LE(std::abs(s.omega(z)), std::abs(z) * (1 + 1e-12) + 1e-15) << s.label;
        }
    }
}

TEST(Samples, BlaschkeDerivativesMatchFiniteDifferences) {
    const auto s = gft::schwarz_blaschke(Complex(0.3, 0.5), Complex(-0.6, 0.2));
    for (Complex z : {Complex(0.2, 0.1), Complex(-0.5, 0.4)}) {
        EXPECT_NEAR(std::abs(s.omega.deriv1(z) - oracle::central_diff([&](Complex w) { return s.omega(w); }, z)), 0.0,
                    1e-8);
        EXPECT_NEAR(
            std::abs(s.omega.deriv2(z) - oracle::central_diff([&](Complex w) { return s.omega.deriv1(w); }, z)), 0.0,
            1e-7);
    }
}

TEST(Suite, BoundsSuitePasses) {
    for (const auto& row : gft::bounds_suite(7)) EXPECT_TRUE(row.passed) << row.name << " " << row.value;
}
