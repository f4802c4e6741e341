#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pricing/rng.hpp"

namespace pricing {

// Exponential weights over expert (policy) advice for adversarial contextual
// bandits:
//   p_j = (1 - g) * sum_{i: advice_i = j} w_i / sum_i w_i + g / K
//   sample a ~ p, observe reward r in [0, scale]
//   r_hat = (r / scale) / p_a (IPS), credited to agreeing policies
//   w_i <- w_i * exp((g / K) * r_hat * 1[advice_i = a])
// with g = min(1, sqrt(K ln N / ((e - 1) T))), the choice realizing the
// O(sqrt(T K ln N)) guarantee on [0, 1] rewards.
class Exp4Agent {
public:
    Exp4Agent(std::size_t num_policies, std::size_t num_actions, long long horizon,
              double reward_scale, std::uint64_t seed);

    std::size_t num_policies() const { return weights_.size(); }
    std::size_t num_actions() const { return num_actions_; }
    double explore_rate() const { return explore_rate_; }
    double reward_scale() const { return reward_scale_; }
    const std::vector<double>& weights() const { return weights_; }

    void action_distribution(std::span<const int> advice, std::vector<double>& p) const;
    int sample_action(std::span<const double> p);
    void update(std::span<const int> advice, int chosen, double p_chosen, double reward);

private:
    std::size_t num_actions_;
    double reward_scale_;
    double explore_rate_;
    std::vector<double> weights_;
    Rng rng_;
};

} // namespace pricing
