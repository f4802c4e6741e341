#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pricing {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Shared discretization context: parameter-grid step delta, price/CDF grid
// step gamma, feature-norm bound B, dimension d and horizon T.
struct GridSpec {
    double delta = 0.1;
    double gamma = 0.1;
    int feature_bound = 1; // B
    int dim = 1;           // d
    long long horizon = 1; // T

    void validate() const;
    // LV constructions additionally need delta * sqrt(d) <= gamma, which the
    // ceil-rounded parameter estimate relies on.
    void validate_lv() const;
};

// One sale session as the protocol records it.
struct Round {
    long long t = 0;
    std::vector<double> x;
    double price_posted = 0.0;
    bool sold = false;
    double reward = 0.0; // price_posted if sold else 0
};

Round make_round(long long t, std::vector<double> x, double price_posted, bool sold);

// gamma-lower/upper rounding: floor(x/gamma)*gamma and ceil(x/gamma)*gamma.
// Quotients within 1e-12 (relative) of an integer snap to it first, so exact
// grid multiples survive accumulated float error.
long long floor_index(double x, double gamma);
long long ceil_index(double x, double gamma);
double floor_round(double x, double gamma);
double ceil_round(double x, double gamma);

std::vector<double> vector_floor_round(std::span<const double> v, double gamma);
std::vector<double> vector_ceil_round(std::span<const double> v, double gamma);

// Cell index plus fractional position in [0, 1); frac is snapped to 0 when x
// sits on a grid point.
std::pair<long long, double> grid_locate(double x, double gamma);

double dot(std::span<const double> a, std::span<const double> b);
double l2_norm(std::span<const double> v);

} // namespace pricing
