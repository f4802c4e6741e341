#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "pricing/bump.hpp"
#include "pricing/discrete_cdf.hpp"
#include "pricing/piecewise_cdf.hpp"
#include "pricing/rng.hpp"

namespace pricing {

// Standard basis vectors with uniformly random coordinate (one per round).
std::vector<std::vector<double>> make_onehot_contexts(int d, long long T, std::uint64_t seed);

// Uniform direction on the nonnegative orthant of the radius-B sphere.
std::vector<double> sample_sphere_quadrant(int d, double radius, Rng& rng);
std::vector<std::vector<double>> make_sphere_contexts(int d, double radius, long long T,
                                                      std::uint64_t seed);

// Market noise on [-1, 1]. "None" is the zero-noise point mass used by
// deterministic-valuation tests.
struct NoiseSpec {
    enum class Kind { None, Uniform, TruncatedGaussian, Discrete };
    Kind kind = Kind::Uniform;
    double sigma = 0.25;            // truncated gaussian only
    std::optional<DiscreteCdf> cdf; // discrete only

    double sample(Rng& rng) const;
    // analytic CDF, right-continuous at atoms
    double cdf_value(double w) const;
    // exact piecewise-linear form where one exists (None/Uniform/Discrete)
    std::optional<PiecewiseCdf> piecewise() const;
    std::string name() const;
};

// Linear noisy valuations y_t = x.theta* + N_t over a fixed context sequence
// (cycled when shorter than the horizon).
class LinearValuationEnv {
public:
    LinearValuationEnv(std::vector<double> theta_star, NoiseSpec noise,
                       std::vector<std::vector<double>> contexts, double feature_bound,
                       std::uint64_t seed);

    int dim() const { return static_cast<int>(theta_star_.size()); }
    double feature_bound() const { return feature_bound_; }
    const std::vector<double>& theta_star() const { return theta_star_; }
    const NoiseSpec& noise() const { return noise_; }

    std::span<const double> next_context(long long t);
    bool post_price(long long t, double price);

    double noiseless_valuation(long long t) const { return us_.at(static_cast<std::size_t>(t)); }
    const std::vector<double>& realized_valuations() const { return ys_; }
    const std::vector<std::vector<double>>& seen_contexts() const { return xs_; }
    double accept_probability(std::span<const double> x, double price) const;

private:
    std::vector<double> theta_star_;
    NoiseSpec noise_;
    std::vector<std::vector<double>> context_pool_;
    double feature_bound_;
    Rng rng_;
    std::vector<std::vector<double>> xs_;
    std::vector<double> us_;
    std::vector<double> ys_;
};

// Gaussian-noise environment calibrated so the linear price x.beta* is the
// expected-revenue maximizer every round: u_t = J^{-1}(x.beta*). Contexts are
// drawn on the nonnegative orthant of the radius-B sphere unless a fixed pool
// is supplied.
class GaussianGreedyEnv {
public:
    GaussianGreedyEnv(std::vector<double> beta_star, double sigma, int d, double feature_bound,
                      std::uint64_t seed, std::vector<std::vector<double>> fixed_contexts = {});

    int dim() const { return d_; }
    double feature_bound() const { return feature_bound_; }
    double sigma() const { return sigma_; }
    const std::vector<double>& beta_star() const { return beta_star_; }

    std::span<const double> next_context(long long t);
    bool post_price(long long t, double price);

    const std::vector<std::vector<double>>& seen_contexts() const { return xs_; }
    const std::vector<double>& realized_valuations() const { return ys_; }
    const std::vector<double>& noiseless_valuations() const { return us_; }
    const std::vector<double>& benchmark_prices() const { return bench_prices_; }
    const std::vector<double>& benchmark_rewards() const { return bench_rewards_; }
    double accept_probability(long long t, double price) const;

private:
    std::vector<double> beta_star_;
    double sigma_;
    int d_;
    double feature_bound_;
    Rng rng_;
    std::vector<std::vector<double>> fixed_contexts_;
    std::vector<std::vector<double>> xs_;
    std::vector<double> us_;
    std::vector<double> ys_;
    std::vector<double> bench_prices_;
    std::vector<double> bench_rewards_;
    std::unordered_map<long long, double> inverse_cache_; // repeated benchmark prices
};

// Nested-interval hard instance with Bernoulli(d(v)) feedback; context-free
// (d = 1, x = 1).
class BumpEnv {
public:
    BumpEnv(BumpInstance inst, std::uint64_t seed);

    int dim() const { return 1; }
    double feature_bound() const { return 1.0; }
    const BumpInstance& instance() const { return inst_; }

    std::span<const double> next_context(long long t);
    bool post_price(long long t, double price);

    double accept_probability(double price) const { return demand_d(inst_, price); }
    // hidden per-round optimum (constant across rounds)
    double optimal_expected_revenue() const { return opt_value_; }
    double optimal_price() const { return opt_price_; }

private:
    BumpInstance inst_;
    Rng rng_;
    std::vector<double> one_{1.0};
    double opt_value_;
    double opt_price_;
};

} // namespace pricing
