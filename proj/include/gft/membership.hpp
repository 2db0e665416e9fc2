#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "gft/analytic.hpp"

namespace gft {

/// Sup values within this distance of the threshold are flagged as boundary-marginal.
inline constexpr double kMarginalBand = 1e-9;

/// Outcome of a grid-certified membership test. satisfied <=> sup_value < threshold.
struct MembershipReport {
    bool satisfied = false;
    double sup_value = 0.0;
    double threshold = 0.0;
    double argmax_r = 0.0;
    double argmax_theta = 0.0;
    bool boundary_marginal = false;
    std::string caveat = "grid-certified only";
    /// Non-empty when evaluation hit a pole or another failure.
    std::string diagnostic;
};

inline MembershipReport make_report(double sup_value, double threshold, double r, double theta) {
    MembershipReport rep;
    rep.sup_value = sup_value;
    rep.threshold = threshold;
    rep.satisfied = sup_value < threshold;
    rep.argmax_r = r;
    rep.argmax_theta = theta;
    rep.boundary_marginal = std::abs(sup_value - threshold) <= kMarginalBand;
    return rep;
}

/// Sup of `g` on the guard circle of `grid`, compared strictly against `threshold`.
inline MembershipReport guard_report(const std::function<double(Complex)>& g, double threshold,
                                     const DiskGrid& grid) {
    grid.validate();
    const auto m = sup_on_circle(g, grid.guard, grid);
    return make_report(m.value, threshold, grid.guard, m.theta);
}

}  // namespace gft
