#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pricing/discrete_cdf.hpp"
#include "pricing/errors.hpp"
#include "pricing/rng.hpp"
#include "pricing/verify.hpp"

using namespace pricing;

namespace {
double uniform_cdf(double w) {
    if (w < -1.0) return 0.0;
    if (w > 1.0) return 1.0;
    return 0.5 * (w + 1.0);
}
double point_mass_at_zero(double w) { return w < 0.0 ? 0.0 : 1.0; }
} // namespace

TEST_CASE("family counts follow the stars-and-bars formula") {
    CHECK(enumerate_cdf_set(1.0).size() == 3);
    CHECK(enumerate_cdf_set(0.5).size() == 15);
    CHECK(enumerate_cdf_set(1.0 / 3.0).size() == 84);
    CHECK(cdf_set_size(1) == 3);
    CHECK(cdf_set_size(2) == 15);
    CHECK(cdf_set_size(3) == 84);
    CHECK_THROWS_AS(enumerate_cdf_set(0.05), capacity_error); // C(60,20) blows the cap
    CHECK_THROWS_AS(enumerate_cdf_set(0.3), std::invalid_argument); // 1/gamma not integral
}

TEST_CASE("members validate their invariants") {
    for (const auto& f : enumerate_cdf_set(0.5)) {
        CHECK(f.level(0) >= 0);
        CHECK(f.level(f.num_points() - 1) == f.resolution());
        for (std::size_t j = 1; j < f.num_points(); ++j) CHECK(f.level(j) >= f.level(j - 1));
    }
    CHECK_THROWS_AS(DiscreteCdf(0.5, {0, 1, 0, 2, 2}), std::invalid_argument); // decreasing
    CHECK_THROWS_AS(DiscreteCdf(0.5, {0, 0, 1, 1, 1}), std::invalid_argument); // ends below 1
    CHECK_THROWS_AS(DiscreteCdf(0.5, {0, 1, 2}), std::invalid_argument);       // wrong length
}

TEST_CASE("evaluation: tails, grid points and interpolation") {
    const DiscreteCdf f(0.5, {0, 0, 1, 1, 2}); // values 0, 0, .5, .5, 1
    CHECK(f(-2.0) == 0.0);
    CHECK(f(2.0) == 1.0);
    CHECK(f(-1.0) == 0.0);
    CHECK(f(0.0) == doctest::Approx(0.5));
    CHECK(f(0.75) == doctest::Approx(0.75)); // hand-applied interpolation
    CHECK(f(-0.75) == doctest::Approx(0.0));
    CHECK(f(0.25) == doctest::Approx(0.5));
}

TEST_CASE("discretization of the uniform CDF") {
    const DiscreteCdf hat = discretize_cdf(uniform_cdf, 0.5);
    CHECK(hat.levels() == std::vector<int>{0, 0, 1, 1, 2});
}

TEST_CASE("discretization fixes members of the family") {
    for (const auto& f : enumerate_cdf_set(0.5)) {
        const DiscreteCdf again = discretize_cdf([&](double v) { return f(v); }, 0.5);
        CHECK(again == f);
    }
}

TEST_CASE("discretization of a right-continuous step function") {
    const DiscreteCdf hat = discretize_cdf(point_mass_at_zero, 0.5);
    CHECK(hat.levels() == std::vector<int>{0, 0, 2, 2, 2});
}

TEST_CASE("non-monotone input is rejected") {
    auto wiggle = [](double v) { return v < 0.0 ? 0.5 : 0.25; };
    CHECK_THROWS_AS(discretize_cdf(wiggle, 0.5), std::invalid_argument);
}

TEST_CASE("sandwich property at every grid point") {
    Rng rng(31);
    const double g = 1.0 / 20.0;
    for (int trial = 0; trial < 100; ++trial) {
        const PiecewiseCdf cdf = random_monotone_cdf(rng, true);
        const DiscreteCdf hat = discretize_cdf(cdf, g);
        for (std::size_t j = 0; j + 1 < hat.num_points(); ++j) {
            const double v = hat.grid_point(j);
            CHECK(hat.value_at(j) <= cdf(v));
            CHECK(cdf(v) <= hat.value_at(j) + g);
        }
        // forced endpoint
        CHECK(hat.value_at(hat.num_points() - 1) == 1.0);
    }
}

TEST_CASE("discretization lands inside the enumerated family") {
    Rng rng(32);
    const auto family = enumerate_cdf_set(1.0 / 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const DiscreteCdf hat = discretize_cdf(random_monotone_cdf(rng, true), 1.0 / 3.0);
        CHECK(std::find(family.begin(), family.end(), hat) != family.end());
    }
}
