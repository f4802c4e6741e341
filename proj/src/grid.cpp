#include "pricing/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pricing {

namespace {

constexpr double kSnapTol = 1e-12;

double checked_quotient(double x, double gamma) {
    if (!(gamma > 0.0))
        throw std::invalid_argument("grid step must be positive, got " + std::to_string(gamma));
    const double q = x / gamma;
    if (!(std::abs(q) < 9.0e15))
        throw std::invalid_argument("value too large for grid index");
    return q;
}

} // namespace

void GridSpec::validate() const {
    // delta = gamma = 1 is the coarsest admissible grid, used by the small
    // worked catalogs.
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("delta must be in (0, 1]");
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::invalid_argument("gamma must be in (0, 1]");
    if (feature_bound < 1) throw std::invalid_argument("feature bound B must be >= 1");
    if (dim < 1) throw std::invalid_argument("dimension d must be >= 1");
    if (horizon < 1) throw std::invalid_argument("horizon T must be >= 1");
}

void GridSpec::validate_lv() const {
    validate();
    if (delta * std::sqrt(static_cast<double>(dim)) > gamma * (1.0 + 1e-9))
        throw std::invalid_argument("LV grids need delta*sqrt(d) <= gamma");
}

Round make_round(long long t, std::vector<double> x, double price_posted, bool sold) {
    if (price_posted < 0.0) throw std::invalid_argument("posted price must be nonnegative");
    Round r;
    r.t = t;
    r.x = std::move(x);
    r.price_posted = price_posted;
    r.sold = sold;
    r.reward = sold ? price_posted : 0.0;
    return r;
}

long long floor_index(double x, double gamma) {
    const double q = checked_quotient(x, gamma);
    const double nearest = std::nearbyint(q);
    if (std::abs(q - nearest) <= kSnapTol * std::max(1.0, std::abs(nearest)))
        return static_cast<long long>(nearest);
    return static_cast<long long>(std::floor(q));
}

long long ceil_index(double x, double gamma) {
    const double q = checked_quotient(x, gamma);
    const double nearest = std::nearbyint(q);
    if (std::abs(q - nearest) <= kSnapTol * std::max(1.0, std::abs(nearest)))
        return static_cast<long long>(nearest);
    return static_cast<long long>(std::ceil(q));
}

double floor_round(double x, double gamma) {
    return static_cast<double>(floor_index(x, gamma)) * gamma;
}

double ceil_round(double x, double gamma) {
    return static_cast<double>(ceil_index(x, gamma)) * gamma;
}

std::vector<double> vector_floor_round(std::span<const double> v, double gamma) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = floor_round(v[i], gamma);
    return out;
}

std::vector<double> vector_ceil_round(std::span<const double> v, double gamma) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = ceil_round(v[i], gamma);
    return out;
}

std::pair<long long, double> grid_locate(double x, double gamma) {
    const long long idx = floor_index(x, gamma);
    double frac = x / gamma - static_cast<double>(idx);
    if (frac < 0.0) frac = 0.0;
    if (frac >= 1.0) frac = std::nextafter(1.0, 0.0);
    if (std::abs(frac) <= kSnapTol * std::max(1.0, std::abs(static_cast<double>(idx))))
        frac = 0.0;
    return {idx, frac};
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double l2_norm(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

} // namespace pricing
