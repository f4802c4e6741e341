#pragma once

#include <vector>

namespace pricing {

// Piecewise linear CDF on [knots.front(), knots.back()]: 0 strictly left of
// the first knot, values.back() right of the last, linear in between. A
// positive values.front() is an atom at the left edge (right-continuous).
struct PiecewiseCdf {
    std::vector<double> knots;  // strictly increasing
    std::vector<double> values; // nondecreasing, within [0, 1]

    double operator()(double w) const;
    void validate() const;
};

struct IncrementOpt {
    double arg = 0.0;   // maximizing w
    double value = 0.0; // objective value there
};

// Global maximum of w -> (u + w) * (1 - F(w)) over [wmin, wmax]. On each
// linear segment of F the objective is a concave quadratic, so candidates are
// segment endpoints plus interior vertices; ties resolve to the smallest w.
// When F jumps at its left edge inside the domain, the supremum from the left
// is approached within 1e-12.
IncrementOpt maximize_increment(double u, const PiecewiseCdf& cdf, double wmin, double wmax);

} // namespace pricing
