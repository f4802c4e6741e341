#pragma once

#include <functional>
#include <vector>

#include "pricing/discrete_cdf.hpp"
#include "pricing/environments.hpp"
#include "pricing/parameter_grid.hpp"
#include "pricing/piecewise_cdf.hpp"

namespace pricing {

struct PriceOpt {
    double price = 0.0;
    double value = 0.0;
};

// Global maximum of v * (1 - F(v - u)) over v in [0, price_cap]. Piecewise
// linear CDFs are solved in closed form per segment; arbitrary CDFs go
// through a dense grid plus local refinement.
PriceOpt per_round_optimal(double u, const PiecewiseCdf& cdf, double price_cap);
PriceOpt per_round_optimal(double u, const DiscreteCdf& cdf, double price_cap);
PriceOpt per_round_optimal_dense(double u, const std::function<double(double)>& cdf,
                                 double price_cap, double step = 1e-5);
PriceOpt per_round_optimal(double u, const NoiseSpec& noise, double price_cap);

struct BetaFit {
    std::vector<double> beta;
    double total = 0.0;
    std::vector<double> per_round; // realized reward of the winner each round
    double gap_bound = 0.0;        // resolution gap vs the continuous argmax
};

// Hindsight oracle for the linear-policy benchmark: exhaustive maximization
// over the grid of sum_t (x_t.beta) * 1[x_t.beta <= y_t]; ties go to the
// lexicographically smallest beta. The grid should be a refinement of the
// policy grid (step <= delta / 4); gap_bound = T * B * step * sqrt(d) by the
// half-Lipschitz property.
BetaFit best_fixed_beta(const std::vector<std::vector<double>>& xs,
                        const std::vector<double>& ys, const ParameterGrid& oracle_grid,
                        double feature_bound);

} // namespace pricing
