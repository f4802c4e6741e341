#include "pricing/exp4.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pricing {

Exp4Agent::Exp4Agent(std::size_t num_policies, std::size_t num_actions, long long horizon,
                     double reward_scale, std::uint64_t seed)
    : num_actions_(num_actions),
      reward_scale_(reward_scale),
      weights_(num_policies, 1.0),
      rng_(seed) {
    if (num_policies < 1) throw std::invalid_argument("need at least one policy");
    if (num_actions < 1) throw std::invalid_argument("need at least one action");
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    if (!(reward_scale > 0.0)) throw std::invalid_argument("reward scale must be positive");

    const double k = static_cast<double>(num_actions);
    const double t = static_cast<double>(horizon);
    explore_rate_ =
        std::min(1.0, std::sqrt(k * std::log(static_cast<double>(num_policies)) /
                                ((std::numbers::e - 1.0) * t)));
    if (!(explore_rate_ > 0.0)) explore_rate_ = 1.0 / (k * t); // N = 1 degenerate case
}

void Exp4Agent::action_distribution(std::span<const int> advice, std::vector<double>& p) const {
    if (advice.size() != weights_.size())
        throw std::invalid_argument("advice length must equal the policy count");
    p.assign(num_actions_, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        const int a = advice[i];
        if (a < 0 || static_cast<std::size_t>(a) >= num_actions_)
            throw std::invalid_argument("advice index out of range");
        p[static_cast<std::size_t>(a)] += weights_[i];
        total += weights_[i];
    }
    const double mix = explore_rate_ / static_cast<double>(num_actions_);
    for (double& pj : p) pj = (1.0 - explore_rate_) * (pj / total) + mix;
}

int Exp4Agent::sample_action(std::span<const double> p) {
    double total = 0.0;
    for (double pj : p) total += pj;
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("action distribution must sum to 1");
    const double u = rng_.uniform01() * total;
    double acc = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        acc += p[j];
        if (u < acc) return static_cast<int>(j);
    }
    return static_cast<int>(p.size()) - 1;
}

void Exp4Agent::update(std::span<const int> advice, int chosen, double p_chosen, double reward) {
    if (advice.size() != weights_.size())
        throw std::invalid_argument("advice length must equal the policy count");
    if (chosen < 0 || static_cast<std::size_t>(chosen) >= num_actions_)
        throw std::invalid_argument("chosen action out of range");
    if (!(reward >= 0.0 && reward <= reward_scale_ * (1.0 + 1e-12)))
        throw std::invalid_argument("reward outside [0, reward_scale]");
    const double floor = explore_rate_ / static_cast<double>(num_actions_);
    if (!(p_chosen >= floor * (1.0 - 1e-9)))
        throw std::invalid_argument("sampling probability below the exploration floor");

    const double r_hat = (reward / reward_scale_) / p_chosen;
    const double mult = std::exp(floor * r_hat);
    double max_w = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (advice[i] == chosen) weights_[i] *= mult;
        max_w = std::max(max_w, weights_[i]);
    }
    if (max_w > 1e100) {
        // the distribution depends only on ratios; rescale to mean 1, with a
        // positivity floor so hopeless policies cannot underflow to zero
        double sum = 0.0;
        for (double w : weights_) sum += w;
        const double scale = static_cast<double>(weights_.size()) / sum;
        for (double& w : weights_) w = std::max(w * scale, 1e-300);
    }
}

} // namespace pricing
