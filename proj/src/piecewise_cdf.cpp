#include "pricing/piecewise_cdf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pricing {

void PiecewiseCdf::validate() const {
    if (knots.size() != values.size() || knots.empty())
        throw std::invalid_argument("piecewise CDF needs matching knots/values");
    for (std::size_t i = 1; i < knots.size(); ++i) {
        if (!(knots[i] > knots[i - 1]))
            throw std::invalid_argument("piecewise CDF knots must increase");
        if (values[i] < values[i - 1] - 1e-12)
            throw std::invalid_argument("piecewise CDF values must be nondecreasing");
    }
    if (values.front() < -1e-12 || values.back() > 1.0 + 1e-12)
        throw std::invalid_argument("piecewise CDF values must lie in [0, 1]");
}

double PiecewiseCdf::operator()(double w) const {
    if (w < knots.front()) return 0.0;
    if (w >= knots.back()) return values.back();
    const auto it = std::upper_bound(knots.begin(), knots.end(), w);
    const std::size_t j = static_cast<std::size_t>(it - knots.begin()) - 1;
    const double t = (w - knots[j]) / (knots[j + 1] - knots[j]);
    return values[j] + t * (values[j + 1] - values[j]);
}

IncrementOpt maximize_increment(double u, const PiecewiseCdf& cdf, double wmin, double wmax) {
    if (!(wmin <= wmax)) throw std::invalid_argument("empty increment domain");

    IncrementOpt best{wmin, (u + wmin) * (1.0 - cdf(wmin))};
    auto consider = [&](double w) {
        if (w < wmin || w > wmax) return;
        const double val = (u + w) * (1.0 - cdf(w));
        if (val > best.value) best = {w, val};
    };

    // Approach a left-edge atom from below: F is 0 strictly left of the first
    // knot, so the objective climbs linearly toward it.
    if (cdf.values.front() > 0.0 && wmin < cdf.knots.front())
        consider(cdf.knots.front() - 1e-12);

    const std::size_t m = cdf.knots.size();
    for (std::size_t j = 0; j + 1 < m; ++j) {
        const double w0 = cdf.knots[j], w1 = cdf.knots[j + 1];
        if (w1 < wmin || w0 > wmax) {
            consider(w0);
            continue;
        }
        consider(std::max(w0, wmin));
        const double slope = (cdf.values[j + 1] - cdf.values[j]) / (w1 - w0);
        if (slope > 0.0) {
            const double wv = 0.5 * ((1.0 - cdf.values[j]) / slope + w0 - u);
            if (wv > w0 && wv < w1) consider(wv);
        }
    }
    consider(std::min(cdf.knots.back(), wmax));
    consider(wmax);
    return best;
}

} // namespace pricing
