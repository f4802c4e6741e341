#pragma once

namespace pricing {

double normal_cdf(double z);

// Greedy price for noiseless valuation u under N(0, sigma^2) noise: the
// maximizer of v * (1 - Phi((v - u) / sigma)). The objective is log-concave,
// so golden-section search over [0, u + 6 sigma + 1] finds the global
// maximum; absolute tolerance 1e-9 on the argument.
double greedy_price_J(double u, double sigma);

// Inverse of the greedy price map by bisection (J is strictly increasing
// with slope in (0, 1)); |J(result) - price| <= 1e-8. Throws domain_error
// below J(0, sigma).
double inverse_J(double price, double sigma);

} // namespace pricing
