#include "pricing/discrete_cdf.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pricing {

DiscreteCdf::DiscreteCdf(double gamma, std::vector<int> levels)
    : gamma_(gamma), n_(resolution_or_throw(gamma)), levels_(std::move(levels)) {
    if (levels_.size() != static_cast<std::size_t>(2 * n_ + 1))
        throw std::invalid_argument("discrete CDF needs 2/gamma + 1 grid values");
    if (levels_.front() < 0) throw std::invalid_argument("discrete CDF values must be >= 0");
    for (std::size_t j = 1; j < levels_.size(); ++j)
        if (levels_[j] < levels_[j - 1])
            throw std::invalid_argument("discrete CDF values must be nondecreasing");
    if (levels_.back() != n_)
        throw std::invalid_argument("discrete CDF must reach 1 at v = 1");
}

int DiscreteCdf::resolution_or_throw(double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::invalid_argument("gamma must be in (0, 1]");
    const double inv = 1.0 / gamma;
    const double nearest = std::nearbyint(inv);
    if (std::abs(inv - nearest) > 1e-9 * std::max(1.0, std::abs(nearest)))
        throw std::invalid_argument("1/gamma must be a positive integer, got gamma = " +
                                    std::to_string(gamma));
    return static_cast<int>(nearest);
}

double DiscreteCdf::operator()(double v) const {
    if (v < -1.0) return 0.0;
    if (v >= 1.0) return 1.0;
    auto [idx, frac] = grid_locate(v + 1.0, gamma_);
    if (idx < 0) return 0.0; // v == -1 after snapping handled above
    std::size_t j = static_cast<std::size_t>(idx);
    if (j >= levels_.size() - 1) return 1.0;
    const double lo = value_at(j);
    if (frac == 0.0) return lo;
    return lo + frac * (value_at(j + 1) - lo);
}

PiecewiseCdf DiscreteCdf::to_piecewise() const {
    PiecewiseCdf out;
    out.knots.resize(levels_.size());
    out.values.resize(levels_.size());
    for (std::size_t j = 0; j < levels_.size(); ++j) {
        out.knots[j] = grid_point(j);
        out.values[j] = value_at(j);
    }
    return out;
}

std::uint64_t cdf_set_size(int n) {
    if (n < 1) throw std::invalid_argument("resolution must be >= 1");
    unsigned __int128 r = 1;
    for (int i = 1; i <= n; ++i) {
        r = r * static_cast<unsigned>(2 * n + i) / static_cast<unsigned>(i);
        if (r > static_cast<unsigned __int128>(UINT64_MAX)) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<DiscreteCdf> enumerate_cdf_set(double gamma, std::uint64_t cap) {
    const int n = DiscreteCdf::resolution_or_throw(gamma);
    const std::uint64_t count = cdf_set_size(n);
    if (count > cap)
        throw capacity_error("CDF set for gamma = 1/" + std::to_string(n) + " has binom(" +
                                 std::to_string(3 * n) + ", " + std::to_string(n) + ") = " +
                                 std::to_string(count) + " members, over cap " +
                                 std::to_string(cap),
                             count);

    std::vector<DiscreteCdf> out;
    out.reserve(count);
    std::vector<int> levels(static_cast<std::size_t>(2 * n + 1), 0);
    // lexicographic DFS over nondecreasing level sequences ending at n
    auto rec = [&](auto&& self, int pos, int low) -> void {
        if (pos == 2 * n) {
            levels[static_cast<std::size_t>(pos)] = n;
            out.emplace_back(gamma, levels);
            return;
        }
        for (int v = low; v <= n; ++v) {
            levels[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace pricing
