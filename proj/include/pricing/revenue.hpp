#pragma once

#include <stdexcept>
#include <utility>

namespace pricing {

// Expected revenue of price v against noiseless valuation u and noise CDF F:
// v * (1 - F(v - u)). F is any nondecreasing CDF-like callable.
template <class Cdf>
double revenue_g(double v, double u, Cdf&& cdf) {
    if (v < 0.0) throw std::invalid_argument("price must be nonnegative");
    return v * (1.0 - std::forward<Cdf>(cdf)(v - u));
}

// Expected revenue of price v under acceptance probability F_LP(v|x).
inline double revenue_h(double v, double accept_prob) {
    if (v < 0.0) throw std::invalid_argument("price must be nonnegative");
    if (!(accept_prob >= 0.0 && accept_prob <= 1.0))
        throw std::invalid_argument("acceptance probability must be in [0, 1]");
    return v * accept_prob;
}

} // namespace pricing
