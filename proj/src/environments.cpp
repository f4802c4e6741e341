#include "pricing/environments.hpp"

#include <algorithm>
#include <cstring>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pricing/gaussian_pricing.hpp"
#include "pricing/grid.hpp"

namespace pricing {

std::vector<std::vector<double>> make_onehot_contexts(int d, long long T, std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    Rng rng(seed);
    std::vector<std::vector<double>> out(static_cast<std::size_t>(T));
    for (auto& x : out) {
        x.assign(static_cast<std::size_t>(d), 0.0);
        x[rng.uniform_int(static_cast<std::uint64_t>(d))] = 1.0;
    }
    return out;
}

std::vector<double> sample_sphere_quadrant(int d, double radius, Rng& rng) {
    std::vector<double> x(static_cast<std::size_t>(d));
    for (;;) {
        double norm_sq = 0.0;
        for (double& xi : x) {
            xi = std::abs(rng.normal());
            norm_sq += xi * xi;
        }
        if (norm_sq > 1e-24) {
            const double scale = radius / std::sqrt(norm_sq);
            for (double& xi : x) xi *= scale;
            return x;
        }
    }
}

std::vector<std::vector<double>> make_sphere_contexts(int d, double radius, long long T,
                                                      std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<double>> out(static_cast<std::size_t>(T));
    for (auto& x : out) x = sample_sphere_quadrant(d, radius, rng);
    return out;
}

double NoiseSpec::sample(Rng& rng) const {
    switch (kind) {
    case Kind::None:
        return 0.0;
    case Kind::Uniform:
        return rng.uniform(-1.0, 1.0);
    case Kind::TruncatedGaussian: {
        const double n = sigma * rng.normal();
        return std::clamp(n, -1.0, 1.0);
    }
    case Kind::Discrete: {
        // inverse transform on the piecewise linear CDF
        const DiscreteCdf& f = *cdf;
        const double u = rng.uniform01();
        if (u < f.value_at(0)) return -1.0; // atom at the left edge
        for (std::size_t j = 0; j + 1 < f.num_points(); ++j) {
            const double lo = f.value_at(j), hi = f.value_at(j + 1);
            if (u <= hi || j + 2 == f.num_points()) {
                if (hi <= lo) continue;
                const double t = (u - lo) / (hi - lo);
                return f.grid_point(j) + t * f.gamma();
            }
        }
        return 1.0;
    }
    }
    return 0.0;
}

double NoiseSpec::cdf_value(double w) const {
    switch (kind) {
    case Kind::None:
        return w < 0.0 ? 0.0 : 1.0;
    case Kind::Uniform:
        if (w < -1.0) return 0.0;
        if (w > 1.0) return 1.0;
        return 0.5 * (w + 1.0);
    case Kind::TruncatedGaussian:
        if (w < -1.0) return 0.0;
        if (w >= 1.0) return 1.0;
        return normal_cdf(w / sigma);
    case Kind::Discrete:
        return (*cdf)(w);
    }
    return 0.0;
}

std::optional<PiecewiseCdf> NoiseSpec::piecewise() const {
    switch (kind) {
    case Kind::None:
        return PiecewiseCdf{{0.0}, {1.0}};
    case Kind::Uniform:
        return PiecewiseCdf{{-1.0, 1.0}, {0.0, 1.0}};
    case Kind::Discrete:
        return cdf->to_piecewise();
    case Kind::TruncatedGaussian:
        return std::nullopt;
    }
    return std::nullopt;
}

std::string NoiseSpec::name() const {
    switch (kind) {
    case Kind::None:
        return "none";
    case Kind::Uniform:
        return "uniform";
    case Kind::TruncatedGaussian:
        return "truncgauss(sigma=" + std::to_string(sigma) + ")";
    case Kind::Discrete:
        return "discrete(gamma=1/" + std::to_string(cdf->resolution()) + ")";
    }
    return "?";
}

namespace {

void check_admissible(std::span<const double> v, double norm_bound, const char* what) {
    for (double c : v)
        if (c < 0.0)
            throw std::invalid_argument(std::string(what) + " components must be nonnegative");
    if (l2_norm(v) > norm_bound * (1.0 + 1e-9))
        throw std::invalid_argument(std::string(what) + " norm exceeds its bound");
}

} // namespace

LinearValuationEnv::LinearValuationEnv(std::vector<double> theta_star, NoiseSpec noise,
                                       std::vector<std::vector<double>> contexts,
                                       double feature_bound, std::uint64_t seed)
    : theta_star_(std::move(theta_star)),
      noise_(std::move(noise)),
      context_pool_(std::move(contexts)),
      feature_bound_(feature_bound),
      rng_(seed) {
    if (noise_.kind == NoiseSpec::Kind::Discrete && !noise_.cdf)
        throw std::invalid_argument("discrete noise needs a CDF");
    check_admissible(theta_star_, 1.0, "theta*");
    if (context_pool_.empty()) throw std::invalid_argument("context pool must be nonempty");
    for (const auto& x : context_pool_) {
        if (x.size() != theta_star_.size())
            throw std::invalid_argument("context dimension mismatch");
        check_admissible(x, feature_bound_, "context");
    }
}

std::span<const double> LinearValuationEnv::next_context(long long t) {
    if (static_cast<std::size_t>(t) != xs_.size())
        throw std::invalid_argument("contexts must be requested sequentially from t = 0");
    const auto& x = context_pool_[static_cast<std::size_t>(t) % context_pool_.size()];
    xs_.push_back(x);
    us_.push_back(dot(x, theta_star_));
    return xs_.back();
}

bool LinearValuationEnv::post_price(long long t, double price) {
    if (static_cast<std::size_t>(t) != ys_.size() || ys_.size() + 1 != xs_.size())
        throw std::invalid_argument("one price per observed context, in order");
    const double y = us_[static_cast<std::size_t>(t)] + noise_.sample(rng_);
    ys_.push_back(y);
    return price <= y;
}

double LinearValuationEnv::accept_probability(std::span<const double> x, double price) const {
    return 1.0 - noise_.cdf_value(price - dot(x, theta_star_));
}

GaussianGreedyEnv::GaussianGreedyEnv(std::vector<double> beta_star, double sigma, int d,
                                     double feature_bound, std::uint64_t seed,
                                     std::vector<std::vector<double>> fixed_contexts)
    : beta_star_(std::move(beta_star)),
      sigma_(sigma),
      d_(d),
      feature_bound_(feature_bound),
      rng_(seed),
      fixed_contexts_(std::move(fixed_contexts)) {
    if (!(sigma_ > 0.0)) throw std::invalid_argument("sigma must be positive");
    if (static_cast<int>(beta_star_.size()) != d_)
        throw std::invalid_argument("beta* dimension mismatch");
    check_admissible(beta_star_, 1.0, "beta*");
}

std::span<const double> GaussianGreedyEnv::next_context(long long t) {
    if (static_cast<std::size_t>(t) != xs_.size())
        throw std::invalid_argument("contexts must be requested sequentially from t = 0");
    if (fixed_contexts_.empty())
        xs_.push_back(sample_sphere_quadrant(d_, feature_bound_, rng_));
    else
        xs_.push_back(fixed_contexts_[static_cast<std::size_t>(t) % fixed_contexts_.size()]);
    const double p_star = dot(xs_.back(), beta_star_);
    bench_prices_.push_back(p_star);
    long long bits;
    std::memcpy(&bits, &p_star, sizeof(bits));
    auto it = inverse_cache_.find(bits);
    if (it == inverse_cache_.end())
        it = inverse_cache_.emplace(bits, inverse_J(p_star, sigma_)).first;
    us_.push_back(it->second);
    return xs_.back();
}

bool GaussianGreedyEnv::post_price(long long t, double price) {
    if (static_cast<std::size_t>(t) != ys_.size() || ys_.size() + 1 != xs_.size())
        throw std::invalid_argument("one price per observed context, in order");
    const std::size_t i = static_cast<std::size_t>(t);
    const double y = us_[i] + sigma_ * rng_.normal();
    ys_.push_back(y);
    // same valuation draw scores the benchmark price
    bench_rewards_.push_back(bench_prices_[i] <= y ? bench_prices_[i] : 0.0);
    return price <= y;
}

double GaussianGreedyEnv::accept_probability(long long t, double price) const {
    return 1.0 - normal_cdf((price - us_.at(static_cast<std::size_t>(t))) / sigma_);
}

BumpEnv::BumpEnv(BumpInstance inst, std::uint64_t seed)
    : inst_(std::move(inst)), rng_(seed) {
    const auto [value, price] = optimal_revenue_and_price(inst_);
    opt_value_ = value;
    opt_price_ = price;
}

std::span<const double> BumpEnv::next_context(long long) { return one_; }

bool BumpEnv::post_price(long long, double price) {
    return rng_.bernoulli(demand_d(inst_, price));
}

} // namespace pricing
