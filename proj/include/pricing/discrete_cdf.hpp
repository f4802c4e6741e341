#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pricing/errors.hpp"
#include "pricing/grid.hpp"
#include "pricing/piecewise_cdf.hpp"

namespace pricing {

// A member of the discretized CDF family: grid points -1, -1+gamma, ..., 1
// carry values that are integer multiples of gamma, nondecreasing, ending at
// exactly 1; evaluation linearly interpolates between neighbours, is 0 left
// of -1 and 1 right of +1. Values are stored as integer levels (multiples of
// gamma) so grid membership stays exactly testable.
class DiscreteCdf {
public:
    DiscreteCdf(double gamma, std::vector<int> levels);

    // 1/gamma as a positive integer; throws invalid_argument otherwise.
    static int resolution_or_throw(double gamma);

    double gamma() const { return gamma_; }
    int resolution() const { return n_; } // 1/gamma
    std::size_t num_points() const { return levels_.size(); } // 2n + 1

    int level(std::size_t j) const { return levels_[j]; }
    double value_at(std::size_t j) const { return static_cast<double>(levels_[j]) * gamma_; }
    double grid_point(std::size_t j) const { return -1.0 + static_cast<double>(j) * gamma_; }
    const std::vector<int>& levels() const { return levels_; }

    double operator()(double v) const;

    PiecewiseCdf to_piecewise() const;

    bool operator==(const DiscreteCdf& other) const {
        return n_ == other.n_ && levels_ == other.levels_;
    }

private:
    double gamma_;
    int n_;
    std::vector<int> levels_;
};

inline double cdf_eval(const DiscreteCdf& cdf, double v) { return cdf(v); }

// |F_gamma| = binom(3n, n) for gamma = 1/n; saturates to UINT64_MAX on
// overflow.
std::uint64_t cdf_set_size(int n);

std::vector<DiscreteCdf> enumerate_cdf_set(double gamma,
                                           std::uint64_t cap = kDefaultEnumerationCap);

// Grid value at i*gamma is the gamma-lower rounding of F(i*gamma); the value
// at +1 is forced to 1. F must be nondecreasing at the grid points.
template <class Cdf>
DiscreteCdf discretize_cdf(Cdf&& cdf, double gamma) {
    const int n = DiscreteCdf::resolution_or_throw(gamma);
    std::vector<int> levels(static_cast<std::size_t>(2 * n + 1));
    double prev = -1.0;
    for (int j = 0; j <= 2 * n; ++j) {
        const double v = -1.0 + static_cast<double>(j) * gamma;
        const double f = cdf(v);
        if (f < prev - 1e-12)
            throw std::invalid_argument("discretize_cdf: CDF decreases at a grid point");
        prev = f;
        long long lv = floor_index(f, gamma);
        if (lv < 0) lv = 0;
        if (lv > n) lv = n;
        levels[static_cast<std::size_t>(j)] = static_cast<int>(lv);
    }
    levels.back() = n;
    return DiscreteCdf(gamma, std::move(levels));
}

} // namespace pricing
