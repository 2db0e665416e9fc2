#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "gft/errors.hpp"

namespace gft::quad {

/// Nodes and weights of an n-point Gauss rule for the weight x^exponent on [0, 1].
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss–Jacobi rule via Golub–Welsch on the Jacobi matrix of P^{(0, b)} on [-1, 1],
/// then mapped to [0, 1]. exponent = 0 gives Gauss–Legendre.
inline Rule make_jacobi_rule(int n, double exponent) {
    if (n < 1) throw DomainError("make_jacobi_rule: n must be >= 1");
    if (!(exponent > -1.0)) throw DomainError("make_jacobi_rule: weight exponent must exceed -1");
    const double a = 0.0, b = exponent, ab = a + b;
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
    diag(0) = (b - a) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double t = 2.0 * k + ab;
        diag(k) = (b * b - a * a) / (t * (t + 2.0));
        const double beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (t * t * (t + 1.0) * (t - 1.0));
        sub(k - 1) = std::sqrt(beta);
    }
    Rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    if (n == 1) {
        rule.nodes[0] = 0.5 * (1.0 + diag(0));
        rule.weights[0] = 1.0 / (b + 1.0);
        return rule;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) throw AccuracyError("make_jacobi_rule: eigensolver failed", 0.0);
    // integral of x^b over [0,1] is 1/(b+1)
    const double mu0 = 1.0 / (b + 1.0);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = 0.5 * (1.0 + es.eigenvalues()(i));
        const double v = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v * v;
    }
    return rule;
}

/// Process-wide cache of rules keyed by (n, exponent).
inline const Rule& jacobi_rule(int n, double exponent) {
    static std::mutex mu;
    static std::map<std::pair<int, double>, std::shared_ptr<const Rule>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{n, exponent}];
    if (!slot) slot = std::make_shared<const Rule>(make_jacobi_rule(n, exponent));
    return *slot;
}

inline const Rule& legendre_rule(int n) { return jacobi_rule(n, 0.0); }

/// Adaptive Gauss–Legendre integration of a complex integrand over [lo, hi].
///
/// A panel is accepted when its 15-point value agrees with the sum over its two halves
/// to within abs_tol + rel_tol * |value|; otherwise both halves are refined.
template <typename F>
std::complex<double> adaptive_legendre(F&& integrand, double lo, double hi,
                                       double abs_tol = 1e-15, double rel_tol = 1e-14,
                                       int max_depth = 40) {
    const Rule& g = legendre_rule(15);
    auto panel = [&](double a, double b) {
        std::complex<double> s{};
        for (std::size_t i = 0; i < g.nodes.size(); ++i)
            s += g.weights[i] * integrand(a + (b - a) * g.nodes[i]);
        return s * (b - a);
    };
    struct Frame { double a, b; std::complex<double> whole; int depth; };
    std::vector<Frame> stack{{lo, hi, panel(lo, hi), 0}};
    std::complex<double> total{};
    double worst = 0.0;
    bool converged = true;
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        const double m = 0.5 * (f.a + f.b);
        const auto left = panel(f.a, m), right = panel(m, f.b);
        const double err = std::abs(left + right - f.whole);
        const double scale = (f.b - f.a) / (hi - lo);
        if (err <= scale * abs_tol + rel_tol * std::abs(left + right) || f.depth >= max_depth) {
            if (f.depth >= max_depth && err > scale * abs_tol + rel_tol * std::abs(left + right)) {
                converged = false;
                worst = std::max(worst, err);
            }
            total += left + right;
        } else {
            stack.push_back({m, f.b, right, f.depth + 1});
            stack.push_back({f.a, m, left, f.depth + 1});
        }
    }
    if (!converged) throw AccuracyError("adaptive_legendre: panel tolerance not reached", worst);
    return total;
}

}  // namespace gft::quad
