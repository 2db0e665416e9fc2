#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library's quadrature, root finding or circle sup.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

/// Coefficients of exp(a(z)) given a(0) = 0, by the recurrence n b_n = sum k a_k b_{n-k}.
inline std::vector<double> series_exp(const std::vector<double>& a) {
    std::vector<double> b(a.size(), 0.0);
    b[0] = 1.0;
    for (std::size_t n = 1; n < a.size(); ++n) {
        double s = 0.0;
        for (std::size_t k = 1; k <= n; ++k) s += static_cast<double>(k) * a[k] * b[n - k];
        b[n] = s / static_cast<double>(n);
    }
    return b;
}

/// Taylor coefficients of f0 = z exp(int_0^z (phi - 1)/t dt), given those of phi - 1 (index 0 unused).
/// Returned list starts at a_1.
inline std::vector<double> structural_coeffs(const std::vector<double>& phi_minus_1) {
    std::vector<double> integral(phi_minus_1.size(), 0.0);
    for (std::size_t k = 1; k < phi_minus_1.size(); ++k) integral[k] = phi_minus_1[k] / static_cast<double>(k);
    return series_exp(integral);
}

inline double binom_half(int k) {
    double c = 1.0;
    for (int j = 0; j < k; ++j) c *= (0.5 - j) / (j + 1);
    return c;
}

/// Composite Simpson rule with m (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int m = 2000) {
    const double h = (b - a) / m;
    double s = f(a) + f(b);
    for (int i = 1; i < m; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

/// Plain dense angular maximum, no refinement.
inline double dense_sup(const std::function<double(Complex)>& g, double r, int nodes = 200000) {
    double m = -INFINITY;
    for (int k = 0; k < nodes; ++k) m = std::max(m, g(std::polar(r, 2.0 * std::numbers::pi * k / nodes)));
    return m;
}

inline double dense_min(const std::function<double(Complex)>& g, double r, int nodes = 200000) {
    return -dense_sup([&](Complex z) { return -g(z); }, r, nodes);
}

/// Plain bisection on a bracket with a sign change.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int iters = 200) {
    double flo = f(lo);
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// First sign change of f on a fine uniform scan of (0, 1), then bisection.
inline double first_root(const std::function<double(double)>& f, double step = 1e-4) {
    double prev = f(step);
    for (double r = 2 * step; r < 1.0; r += step) {
        const double cur = f(r);
        if ((cur > 0) != (prev > 0)) return bisect(f, r - step, r);
        prev = cur;
    }
    return NAN;
}

inline Complex central_diff(const std::function<Complex(Complex)>& f, Complex z, double h = 1e-5) {
    return (f(z + h) - f(z - h)) / (2.0 * h);
}

}  // namespace oracle
