#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gft/errors.hpp"

namespace gft {

using Complex = std::complex<double>;

/// Value and first two derivatives at one point.
struct Jet {
    Complex value;
    Complex d1;
    Complex d2;
};

/// Dense complex polynomial c_0 + c_1 z + ... + c_m z^m.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {}

    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    Complex operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Complex{}; }

    Complex operator()(Complex z) const {
        Complex acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    /// Horner pass carrying p, p' and p'' together.
    Jet jet(Complex z) const {
        Complex p{}, d1{}, d2{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            d2 = d2 * z + 2.0 * d1;
            d1 = d1 * z + p;
            p = p * z + *it;
        }
        return {p, d1, d2};
    }

    /// Sum of coefficient moduli; bounds |p| on the closed unit disk.
    double l1_norm() const {
        double s = 0.0;
        for (const auto& c : coeffs_) s += std::abs(c);
        return s;
    }

    Polynomial scaled(Complex factor) const {
        auto c = coeffs_;
        for (auto& x : c) x *= factor;
        return Polynomial(std::move(c));
    }

private:
    std::vector<Complex> coeffs_;
};

/// z^k for k >= 0 by repeated multiplication (exact at z = 0).
inline Complex ipow(Complex z, int k) {
    Complex r{1.0};
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

/// Cauchy product truncated to the first `max_terms` coefficients.
inline Polynomial multiply(const Polynomial& a, const Polynomial& b, std::size_t max_terms) {
    if (a.size() == 0 || b.size() == 0) return Polynomial{};
    std::vector<Complex> out(std::min(max_terms, a.size() + b.size() - 1));
    for (std::size_t i = 0; i < a.size() && i < out.size(); ++i)
        for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return Polynomial(std::move(out));
}

/// Default number of Taylor terms kept for series representations.
inline constexpr std::size_t kDefaultTruncation = 64;

/// Truncated normalized Taylor series f(z) = z + a_{n+1} z^{n+1} + ... of a function in A_n.
///
/// coeffs()[0] is a_1 (always 1); coeffs()[k-1] is a_k. Construction enforces the
/// normalization, the vanishing of a_2..a_n, and truncation >= n + 1 (short inputs
/// are zero padded).
class PowerSeries {
public:
    PowerSeries(std::vector<Complex> coeffs, int order_n = 1) : order_n_(order_n) {
        if (order_n < 1) throw DomainError("PowerSeries: order n must be >= 1");
        if (coeffs.empty()) throw DomainError("PowerSeries: empty coefficient list");
        if (std::abs(coeffs[0] - Complex{1.0, 0.0}) != 0.0)
            throw DomainError("PowerSeries: a_1 must equal 1");
        for (std::size_t k = 2; k <= static_cast<std::size_t>(order_n) && k <= coeffs.size(); ++k)
            if (coeffs[k - 1] != Complex{})
                throw DomainError("PowerSeries: a_" + std::to_string(k) +
                                  " must vanish for a member of A_" + std::to_string(order_n));
        if (coeffs.size() < static_cast<std::size_t>(order_n) + 1) coeffs.resize(order_n + 1);
        coeffs_ = std::move(coeffs);
    }

    static PowerSeries identity() { return PowerSeries({Complex{1.0}}); }

    /// Koebe function z/(1-z)^2 = sum k z^k, truncated at N terms.
    static PowerSeries koebe(std::size_t terms = kDefaultTruncation) {
        std::vector<Complex> c(terms);
        for (std::size_t k = 0; k < terms; ++k) c[k] = static_cast<double>(k + 1);
        return PowerSeries(std::move(c));
    }

    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    int order_n() const noexcept { return order_n_; }
    std::size_t truncation() const noexcept { return coeffs_.size(); }

    /// The same function as a polynomial with zero constant term.
    Polynomial as_polynomial() const {
        std::vector<Complex> c(coeffs_.size() + 1);
        std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
        return Polynomial(std::move(c));
    }

    /// Geometric tail estimate r^{N+1}/(1-r) * max|a_k| for the discarded terms.
    double tail_bound(double r) const {
        double m = 0.0;
        for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
        return std::pow(r, static_cast<double>(coeffs_.size() + 1)) / (1.0 - r) * m;
    }

private:
    std::vector<Complex> coeffs_;
    int order_n_;
};

/// Horner evaluation of a normalized series inside the unit disk.
inline Complex eval_series(const PowerSeries& s, Complex z) {
    if (!(std::abs(z) < 1.0)) throw DomainError("eval_series: |z| must be < 1");
    Complex acc{};
    const auto c = s.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc * z;
}

enum class Provenance { closed_form, series, quadrature };

inline const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::closed_form: return "closed_form";
        case Provenance::series: return "series";
        case Provenance::quadrature: return "quadrature";
    }
    return "unknown";
}

/// Uniform carrier for an analytic function on the disk together with w' and w''.
///
/// When built from a fused jet evaluator, `jet()` costs one evaluation; the three
/// individual accessors remain available either way.
class AnalyticMap {
public:
    using Fn = std::function<Complex(Complex)>;
    using JetFn = std::function<Jet(Complex)>;

    AnalyticMap() = default;
    AnalyticMap(Fn eval, Fn deriv1, Fn deriv2, Provenance provenance)
        : eval_(std::move(eval)), deriv1_(std::move(deriv1)), deriv2_(std::move(deriv2)),
          provenance_(provenance) {}

    static AnalyticMap from_jet(JetFn jet, Provenance provenance) {
        AnalyticMap m;
        m.eval_ = [jet](Complex z) { return jet(z).value; };
        m.deriv1_ = [jet](Complex z) { return jet(z).d1; };
        m.deriv2_ = [jet](Complex z) { return jet(z).d2; };
        m.jet_ = std::move(jet);
        m.provenance_ = provenance;
        return m;
    }

    /// Same as from_jet but with a cheaper value-only path.
    static AnalyticMap from_jet(Fn eval, JetFn jet, Provenance provenance) {
        AnalyticMap m = from_jet(std::move(jet), provenance);
        m.eval_ = std::move(eval);
        return m;
    }

    Complex operator()(Complex z) const { return eval_(z); }
    Complex eval(Complex z) const { return eval_(z); }
    Complex deriv1(Complex z) const { return deriv1_(z); }
    Complex deriv2(Complex z) const { return deriv2_(z); }
    Jet jet(Complex z) const {
        if (jet_) return jet_(z);
        return {eval_(z), deriv1_(z), deriv2_(z)};
    }
    Provenance provenance() const noexcept { return provenance_; }
    explicit operator bool() const noexcept { return static_cast<bool>(eval_); }

private:
    Fn eval_, deriv1_, deriv2_;
    JetFn jet_;
    Provenance provenance_ = Provenance::closed_form;
};

inline AnalyticMap polynomial_map(Polynomial p, Provenance prov = Provenance::series) {
    auto shared = std::make_shared<const Polynomial>(std::move(p));
    return AnalyticMap::from_jet([shared](Complex z) { return (*shared)(z); },
                                 [shared](Complex z) { return shared->jet(z); }, prov);
}

inline AnalyticMap series_map(const PowerSeries& s) { return polynomial_map(s.as_polynomial()); }

inline AnalyticMap identity_map() {
    return AnalyticMap::from_jet([](Complex z) { return Jet{z, 1.0, 0.0}; }, Provenance::closed_form);
}

/// z/(1 - c z); its zf'/f is 1/(1 - c z).
inline AnalyticMap mobius_star(Complex c) {
    return AnalyticMap::from_jet(
        [c](Complex z) {
            const Complex d = 1.0 - c * z;
            return Jet{z / d, 1.0 / (d * d), 2.0 * c / (d * d * d)};
        },
        Provenance::closed_form);
}

/// Koebe function z/(1-z)^2 in closed form.
inline AnalyticMap koebe_map() {
    return AnalyticMap::from_jet(
        [](Complex z) {
            const Complex d = 1.0 - z;
            return Jet{z / (d * d), (1.0 + z) / (d * d * d), (2.0 * z + 4.0) / (d * d * d * d)};
        },
        Provenance::closed_form);
}

inline void require_in_disk(Complex z, const char* op) {
    if (!(std::abs(z) < 1.0)) throw DomainError(std::string(op) + ": |z| must be < 1");
}

/// Values of |f| or |f'| below this are treated as a pole of the quotient.
inline constexpr double kPoleGuard = 1e-12;

/// |(1 - a + a z f''/f') / (z f'/f) - (1 - a)|, the defining modulus of G_{lambda,alpha}.
inline double g_functional(const AnalyticMap& f, Complex z, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("g_functional: alpha must lie in (0, 1]");
    if (z == Complex{}) throw DomainError("g_functional: z must be nonzero");
    require_in_disk(z, "g_functional");
    const Jet j = f.jet(z);
    if (std::abs(j.value) < kPoleGuard) throw PoleError("g_functional: f vanishes", z);
    if (std::abs(j.d1) < kPoleGuard) throw PoleError("g_functional: f' vanishes", z);
    const Complex num = (1.0 - alpha) + alpha * z * j.d2 / j.d1;
    return std::abs(num * j.value / (z * j.d1) - (1.0 - alpha));
}

/// |z f'(z) - f(z)|, the defining modulus of the class Omega.
inline double omega_functional(const AnalyticMap& f, Complex z) {
    require_in_disk(z, "omega_functional");
    const Jet j = f.jet(z);
    return std::abs(z * j.d1 - j.value);
}

/// Sampling specification for sup-norm estimates on |z| <= r.
struct DiskGrid {
    std::vector<double> radii{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    int angular = 4096;
    double guard = 0.999;

    void validate() const {
        if (angular < 64) throw DomainError("DiskGrid: angular must be >= 64");
        if (!(guard > 0.0 && guard < 1.0)) throw DomainError("DiskGrid: guard must lie in (0, 1)");
        for (std::size_t i = 0; i < radii.size(); ++i) {
            if (!(radii[i] > 0.0 && radii[i] < 1.0)) throw DomainError("DiskGrid: radii must lie in (0, 1)");
            if (i > 0 && !(radii[i] > radii[i - 1])) throw DomainError("DiskGrid: radii must increase strictly");
        }
    }
};

struct CircleMax {
    double value = 0.0;
    double theta = 0.0;
};

namespace detail {

inline double eval_on_circle(const std::function<double(Complex)>& g, double r, double theta) {
    const Complex z = std::polar(r, theta);
    try {
        return g(z);
    } catch (const PoleError&) {
        throw;
    } catch (const Error& e) {
        throw Error(std::string(e.what()) + " [node r=" + std::to_string(r) +
                    ", theta=" + std::to_string(theta) + "]");
    }
}

}  // namespace detail

/// Max of g over r e^{i theta} on an equispaced angular grid, polished by golden-section
/// search in the two cells around the discrete argmax. Nodes are visited in index order.
inline CircleMax sup_on_circle(const std::function<double(Complex)>& g, double r, int angular) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("sup_on_circle: r must lie in (0, 1)");
    if (angular < 64) throw DomainError("sup_on_circle: angular must be >= 64");
    const double h = 2.0 * std::numbers::pi / angular;
    CircleMax best{detail::eval_on_circle(g, r, 0.0), 0.0};
    for (int k = 1; k < angular; ++k) {
        const double th = k * h;
        const double v = detail::eval_on_circle(g, r, th);
        if (v > best.value) best = {v, th};
    }
    // golden-section on [theta* - h, theta* + h]
    constexpr double inv_phi = 0.6180339887498949;
    double a = best.theta - h, b = best.theta + h;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = detail::eval_on_circle(g, r, c), fd = detail::eval_on_circle(g, r, d);
    for (int it = 0; it < 80 && (b - a) > 1e-13; ++it) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - inv_phi * (b - a);
            fc = detail::eval_on_circle(g, r, c);
        } else {
            a = c; c = d; fc = fd;
            d = a + inv_phi * (b - a);
            fd = detail::eval_on_circle(g, r, d);
        }
    }
    const double tm = 0.5 * (a + b);
    const double fm = detail::eval_on_circle(g, r, tm);
    if (fm > best.value) {
        double t = std::fmod(tm, 2.0 * std::numbers::pi);
        if (t < 0.0) t += 2.0 * std::numbers::pi;
        best = {fm, t};
    }
    return best;
}

inline CircleMax sup_on_circle(const std::function<double(Complex)>& g, double r, const DiskGrid& grid) {
    return sup_on_circle(g, r, grid.angular);
}

/// Taylor coefficients c_0..c_{terms-1} of an analytic map recovered by the trapezoidal
/// Cauchy integral on |z| = radius with `nodes` equispaced points.
inline std::vector<Complex> cauchy_coefficients(const AnalyticMap& f, std::size_t terms,
                                                double radius = 0.5, std::size_t nodes = 128) {
    if (!(radius > 0.0 && radius < 1.0)) throw DomainError("cauchy_coefficients: radius must lie in (0, 1)");
    if (nodes < terms) throw DomainError("cauchy_coefficients: need at least as many nodes as terms");
    std::vector<Complex> samples(nodes);
    for (std::size_t j = 0; j < nodes; ++j)
        samples[j] = f(std::polar(radius, 2.0 * std::numbers::pi * j / nodes));
    std::vector<Complex> out(terms);
    for (std::size_t k = 0; k < terms; ++k) {
        Complex acc{};
        for (std::size_t j = 0; j < nodes; ++j)
            acc += samples[j] * std::polar(1.0, -2.0 * std::numbers::pi * double((k * j) % nodes) / nodes);
        out[k] = acc / (static_cast<double>(nodes) * std::pow(radius, static_cast<double>(k)));
    }
    return out;
}

/// Normalized PowerSeries of f recovered on a circle. Recovered a_2..a_n must be at
/// round-off level and are then set to exactly zero.
inline PowerSeries recover_series(const AnalyticMap& f, std::size_t terms, int order_n = 1,
                                  double radius = 0.5, std::size_t nodes = 128) {
    auto c = cauchy_coefficients(f, terms + 1, radius, nodes);
    std::vector<Complex> a(c.begin() + 1, c.end());
    constexpr double kRoundoff = 1e-9;
    if (std::abs(c[0]) > kRoundoff || std::abs(a[0] - 1.0) > kRoundoff)
        throw DomainError("recover_series: map is not normalized (f(0) = 0, f'(0) = 1)");
    a[0] = 1.0;
    for (int k = 2; k <= order_n && k <= static_cast<int>(a.size()); ++k) {
        if (std::abs(a[k - 1]) > kRoundoff)
            throw DomainError("recover_series: map is not in A_" + std::to_string(order_n));
        a[k - 1] = 0.0;
    }
    return PowerSeries(std::move(a), order_n);
}

}  // namespace gft
