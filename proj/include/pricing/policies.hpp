#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pricing/discrete_cdf.hpp"
#include "pricing/grid.hpp"
#include "pricing/parameter_grid.hpp"

namespace pricing {

// Linear-policy price: gamma-lower rounding of x.beta. Components must be
// nonnegative.
double lp_policy_price(std::span<const double> beta, std::span<const double> x, double gamma);

struct IncrementOptResult {
    double w = 0.0;
    double value = 0.0;
};

// Optimal incremental price: global maximizer over w in [-1, 1] of
// (u_hat + w) * (1 - F(w)). Per-segment quadratic analysis: candidates are
// the CDF grid points plus interior vertices; ties break to the smallest w.
IncrementOptResult lv_optimal_increment(double u_hat, const DiscreteCdf& cdf);

// Greedy-and-safe LV price: max{ floor_g(x.theta) - (B+1)gamma + floor_g(w*), 0 }.
double lv_policy_price(std::span<const double> theta_hat, const DiscreteCdf& cdf,
                       std::span<const double> x, const GridSpec& spec);

enum class PolicyKind { LP, LV };

// An enumerated, indexed set of deterministic context->price policies over a
// shared action grid {0, gamma, ..., floor_g(B)} (LP) or {0, ..., floor_g(B+1)}
// (LV). Entries are (theta index) or (theta index, cdf index) pairs; prices
// are computed on demand, never materialized per action.
class PolicyCatalog {
public:
    static PolicyCatalog build(PolicyKind kind, const GridSpec& spec,
                               std::uint64_t cap = kDefaultEnumerationCap);

    PolicyKind kind() const { return kind_; }
    const GridSpec& spec() const { return spec_; }
    std::size_t size() const { return size_; }
    std::size_t num_actions() const { return num_actions_; }
    double action_price(int a) const { return static_cast<double>(a) * spec_.gamma; }

    const ParameterGrid& params() const { return params_; }
    const std::vector<DiscreteCdf>& cdfs() const { return cdfs_; }
    std::pair<std::size_t, std::size_t> entry(std::size_t i) const;

    // advice[i] = action index policy i recommends for context x
    void advice(std::span<const double> x, std::vector<int>& out) const;
    double policy_price(std::size_t i, std::span<const double> x) const;

private:
    PolicyKind kind_ = PolicyKind::LP;
    GridSpec spec_;
    ParameterGrid params_;
    std::vector<DiscreteCdf> cdfs_;
    std::size_t size_ = 0;
    std::size_t num_actions_ = 0;
};

} // namespace pricing
