#include "pricing/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pricing/grid.hpp"

namespace pricing {

PriceOpt per_round_optimal(double u, const PiecewiseCdf& cdf, double price_cap) {
    if (!(price_cap > 0.0)) throw std::invalid_argument("price cap must be positive");
    const IncrementOpt best = maximize_increment(u, cdf, -u, price_cap - u);
    double price = u + best.arg;
    if (price < 0.0) price = 0.0; // float guard at the v = 0 boundary
    return {price, std::max(best.value, 0.0)};
}

PriceOpt per_round_optimal(double u, const DiscreteCdf& cdf, double price_cap) {
    return per_round_optimal(u, cdf.to_piecewise(), price_cap);
}

PriceOpt per_round_optimal_dense(double u, const std::function<double(double)>& cdf,
                                 double price_cap, double step) {
    if (!(price_cap > 0.0)) throw std::invalid_argument("price cap must be positive");
    const auto value = [&](double v) { return v * (1.0 - cdf(v - u)); };
    const long long cells = static_cast<long long>(std::ceil(price_cap / step));
    double best_v = 0.0, best_val = value(0.0);
    for (long long i = 1; i <= cells; ++i) {
        const double v = std::min(static_cast<double>(i) * step, price_cap);
        const double val = value(v);
        if (val > best_val) {
            best_val = val;
            best_v = v;
        }
    }
    // refine inside the bracketing cells
    double lo = std::max(0.0, best_v - step), hi = std::min(price_cap, best_v + step);
    for (int pass = 0; pass < 4; ++pass) {
        const double h = (hi - lo) / 128.0;
        double local_v = best_v, local_val = best_val;
        for (int i = 0; i <= 128; ++i) {
            const double v = lo + h * static_cast<double>(i);
            const double val = value(v);
            if (val > local_val) {
                local_val = val;
                local_v = v;
            }
        }
        best_v = local_v;
        best_val = local_val;
        lo = std::max(lo, best_v - h);
        hi = std::min(hi, best_v + h);
    }
    return {best_v, best_val};
}

PriceOpt per_round_optimal(double u, const NoiseSpec& noise, double price_cap) {
    if (const auto pw = noise.piecewise()) return per_round_optimal(u, *pw, price_cap);
    return per_round_optimal_dense(
        u, [&](double w) { return noise.cdf_value(w); }, price_cap);
}

BetaFit best_fixed_beta(const std::vector<std::vector<double>>& xs,
                        const std::vector<double>& ys, const ParameterGrid& oracle_grid,
                        double feature_bound) {
    if (xs.empty() || xs.size() != ys.size())
        throw std::invalid_argument("hindsight oracle needs a nonempty (x, y) history");

    const std::size_t T = xs.size();
    std::size_t best_i = 0;
    double best_total = -1.0;
    for (std::size_t i = 0; i < oracle_grid.size(); ++i) {
        const auto beta = oracle_grid.vec(i);
        double total = 0.0;
        for (std::size_t t = 0; t < T; ++t) {
            const double p = dot(xs[t], beta);
            if (p <= ys[t]) total += p;
        }
        if (total > best_total) { // first (lexicographically smallest) wins ties
            best_total = total;
            best_i = i;
        }
    }

    BetaFit fit;
    const auto beta = oracle_grid.vec(best_i);
    fit.beta.assign(beta.begin(), beta.end());
    fit.total = best_total;
    fit.per_round.resize(T);
    for (std::size_t t = 0; t < T; ++t) {
        const double p = dot(xs[t], beta);
        fit.per_round[t] = p <= ys[t] ? p : 0.0;
    }
    fit.gap_bound = static_cast<double>(T) * feature_bound * oracle_grid.delta *
                    std::sqrt(static_cast<double>(oracle_grid.dim));
    return fit;
}

} // namespace pricing
