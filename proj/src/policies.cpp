#include "pricing/policies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pricing {

double lp_policy_price(std::span<const double> beta, std::span<const double> x, double gamma) {
    if (beta.size() != x.size())
        throw std::invalid_argument("beta and x must have the same dimension");
    for (double b : beta)
        if (b < 0.0) throw std::invalid_argument("beta components must be nonnegative");
    for (double xi : x)
        if (xi < 0.0) throw std::invalid_argument("feature components must be nonnegative");
    return floor_round(dot(x, beta), gamma);
}

IncrementOptResult lv_optimal_increment(double u_hat, const DiscreteCdf& cdf) {
    const double g = cdf.gamma();
    const int n = cdf.resolution();

    // candidates in ascending w, strict improvement only: smallest tied w wins
    double best_w = -1.0;
    double best_v = (u_hat - 1.0) * (1.0 - cdf.value_at(0));
    for (int j = 0; j < 2 * n; ++j) {
        const std::size_t sj = static_cast<std::size_t>(j);
        const double w0 = -1.0 + static_cast<double>(j) * g;
        const double w1 = w0 + g;
        const int dl = cdf.level(sj + 1) - cdf.level(sj);
        if (dl > 0) {
            const double c = cdf.value_at(sj);
            const double m = static_cast<double>(dl); // slope of F on the segment
            const double wv = 0.5 * ((1.0 - c) / m + w0 - u_hat);
            if (wv > w0 && wv < w1) {
                const double val = (u_hat + wv) * (1.0 - c - m * (wv - w0));
                if (val > best_v) {
                    best_v = val;
                    best_w = wv;
                }
            }
        }
        const double val1 = (u_hat + w1) * (1.0 - cdf.value_at(sj + 1));
        if (val1 > best_v) {
            best_v = val1;
            best_w = w1;
        }
    }
    return {best_w, best_v};
}

namespace {

long long lv_price_index(double u_hat, const DiscreteCdf& cdf, const GridSpec& spec) {
    const long long iu = floor_index(u_hat, spec.gamma);
    const long long iw = floor_index(lv_optimal_increment(u_hat, cdf).w, spec.gamma);
    return iu - (spec.feature_bound + 1) + iw;
}

} // namespace

double lv_policy_price(std::span<const double> theta_hat, const DiscreteCdf& cdf,
                       std::span<const double> x, const GridSpec& spec) {
    const long long idx = lv_price_index(dot(x, theta_hat), cdf, spec);
    return idx <= 0 ? 0.0 : static_cast<double>(idx) * spec.gamma;
}

PolicyCatalog PolicyCatalog::build(PolicyKind kind, const GridSpec& spec, std::uint64_t cap) {
    PolicyCatalog cat;
    cat.kind_ = kind;
    cat.spec_ = spec;

    if (kind == PolicyKind::LP) {
        spec.validate();
        cat.params_ = enumerate_parameter_grid(spec.delta, spec.dim, cap);
        cat.size_ = cat.params_.size();
        cat.num_actions_ =
            static_cast<std::size_t>(floor_index(spec.feature_bound, spec.gamma)) + 1;
        return cat;
    }

    spec.validate_lv();
    const int n = DiscreteCdf::resolution_or_throw(spec.gamma);
    const std::uint64_t n_cdfs = cdf_set_size(n);
    cat.params_ = enumerate_parameter_grid(spec.delta, spec.dim, cap);
    const std::uint64_t total = static_cast<std::uint64_t>(cat.params_.size()) * n_cdfs;
    if (n_cdfs > cap || total > cap)
        throw capacity_error("LV catalog would hold " + std::to_string(cat.params_.size()) +
                                 " * " + std::to_string(n_cdfs) + " = " + std::to_string(total) +
                                 " policies, over cap " + std::to_string(cap),
                             total);
    cat.cdfs_ = enumerate_cdf_set(spec.gamma, cap);
    cat.size_ = cat.params_.size() * cat.cdfs_.size();
    cat.num_actions_ =
        static_cast<std::size_t>(floor_index(spec.feature_bound + 1, spec.gamma)) + 1;
    return cat;
}

std::pair<std::size_t, std::size_t> PolicyCatalog::entry(std::size_t i) const {
    if (i >= size_) throw std::invalid_argument("policy index out of range");
    if (kind_ == PolicyKind::LP) return {i, 0};
    return {i / cdfs_.size(), i % cdfs_.size()};
}

void PolicyCatalog::advice(std::span<const double> x, std::vector<int>& out) const {
    out.resize(size_);
    const long long amax = static_cast<long long>(num_actions_) - 1;
    if (kind_ == PolicyKind::LP) {
        for (std::size_t i = 0; i < params_.size(); ++i) {
            const long long a = floor_index(dot(params_.vec(i), x), spec_.gamma);
            out[i] = static_cast<int>(std::clamp(a, 0LL, amax));
        }
        return;
    }
    std::size_t idx = 0;
    for (std::size_t ti = 0; ti < params_.size(); ++ti) {
        const double u_hat = dot(params_.vec(ti), x);
        const long long iu = floor_index(u_hat, spec_.gamma);
        for (const DiscreteCdf& cdf : cdfs_) {
            const long long iw = floor_index(lv_optimal_increment(u_hat, cdf).w, spec_.gamma);
            const long long a = iu - (spec_.feature_bound + 1) + iw;
            out[idx++] = static_cast<int>(std::clamp(a, 0LL, amax));
        }
    }
}

double PolicyCatalog::policy_price(std::size_t i, std::span<const double> x) const {
    const auto [ti, fi] = entry(i);
    if (kind_ == PolicyKind::LP) return lp_policy_price(params_.vec(ti), x, spec_.gamma);
    return lv_policy_price(params_.vec(ti), cdfs_[fi], x, spec_);
}

} // namespace pricing
