#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pricing/revenue.hpp"
#include "pricing/rng.hpp"
#include "pricing/verify.hpp"

using namespace pricing;

namespace {
double uniform_cdf(double w) {
    if (w < -1.0) return 0.0;
    if (w > 1.0) return 1.0;
    return 0.5 * (w + 1.0);
}
} // namespace

TEST_CASE("revenue_g closed forms under uniform noise") {
    CHECK(revenue_g(0.0, 0.3, uniform_cdf) == 0.0);
    CHECK(revenue_g(0.5, 0.5, uniform_cdf) == doctest::Approx(0.25));
    // quadratic vertex: v*(1 - (v-u+1)/2) peaks at v = (1+u)/2 = 0.75
    CHECK(revenue_g(0.75, 0.5, uniform_cdf) == doctest::Approx(0.28125));
    CHECK_THROWS_AS(revenue_g(-0.1, 0.5, uniform_cdf), std::invalid_argument);
}

TEST_CASE("revenue_h") {
    CHECK(revenue_h(0.5, 1.0) == doctest::Approx(0.5));
    CHECK(revenue_h(0.5, 0.0) == 0.0);
    CHECK(revenue_h(0.8, 0.25) == doctest::Approx(0.2));
    CHECK_THROWS_AS(revenue_h(0.5, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(revenue_h(0.5, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(revenue_h(-1.0, 0.5), std::invalid_argument);
}

TEST_CASE("half-Lipschitz: raising the price gains at most the difference") {
    Rng rng(21);
    for (int i = 0; i < 5000; ++i) {
        const PiecewiseCdf cdf = random_monotone_cdf(rng, true);
        const double u = rng.uniform(0.0, 2.0);
        double v1 = rng.uniform(0.0, 3.0);
        double v2 = rng.uniform(0.0, 3.0);
        if (v1 < v2) std::swap(v1, v2);
        CHECK(revenue_g(v1, u, cdf) - revenue_g(v2, u, cdf) <= v1 - v2 + 1e-12);
    }
}
