#include "pricing/gaussian_pricing.hpp"

#include <cmath>
#include <stdexcept>

namespace pricing {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

namespace {

double expected_revenue(double v, double u, double sigma) {
    return v * (1.0 - normal_cdf((v - u) / sigma));
}

} // namespace

double greedy_price_J(double u, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
    // The maximizer can fall below u once u is large relative to sigma, so
    // the bracket starts at 0 rather than u.
    double a = 0.0;
    double b = u + 6.0 * sigma + 1.0;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = expected_revenue(x1, u, sigma);
    double f2 = expected_revenue(x2, u, sigma);
    while (b - a > 1e-9) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = expected_revenue(x2, u, sigma);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = expected_revenue(x1, u, sigma);
        }
    }
    return 0.5 * (a + b);
}

double inverse_J(double price, double sigma) {
    const double j0 = greedy_price_J(0.0, sigma);
    if (price < j0 - 1e-9)
        throw std::domain_error("price below J(0, sigma); no preimage exists");
    double lo = 0.0;
    double hi = 2.0 * price + 1.0; // J(u) >= u/2, so J(hi) > price
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double jm = greedy_price_J(mid, sigma);
        if (std::abs(jm - price) <= 5e-9) return mid;
        if (jm < price)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-12) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace pricing
