#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pricing/gaussian_pricing.hpp"

using namespace pricing;

namespace {
double revenue(double v, double u, double sigma) {
    return v * (1.0 - normal_cdf((v - u) / sigma));
}
} // namespace

TEST_CASE("normal cdf sanity") {
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5));
    CHECK(normal_cdf(1.0) == doctest::Approx(0.8413447).epsilon(1e-6));
    CHECK(normal_cdf(-6.0) < 1e-8);
}

TEST_CASE("greedy price agrees with a dense-grid argmax") {
    const double sigma = 0.25;
    for (double u : {0.0, 0.3, 0.5, 1.0, 1.7}) {
        const double j = greedy_price_J(u, sigma);
        double best_v = 0.0, best_val = 0.0;
        for (long long i = 0; i <= 3000000; ++i) {
            const double v = static_cast<double>(i) * 1e-6;
            const double val = revenue(v, u, sigma);
            if (val > best_val) {
                best_val = val;
                best_v = v;
            }
        }
        CHECK(j == doctest::Approx(best_v).epsilon(0).scale(1).epsilon(1e-5));
        CHECK(revenue(j, u, sigma) == doctest::Approx(best_val).epsilon(1e-9));
    }
}

TEST_CASE("greedy price exceeds small valuations and undercuts large ones") {
    const double sigma = 0.25;
    CHECK(greedy_price_J(0.0, sigma) > 0.0);
    CHECK(greedy_price_J(0.1, sigma) > 0.1);       // positive upper-tail mass wins
    CHECK(greedy_price_J(1.0, sigma) < 1.0);       // certain-sale region dominates
}

TEST_CASE("J is strictly increasing with slope in (0, 1)") {
    const double sigma = 0.25;
    const double du = 0.05;
    double prev = greedy_price_J(0.0, sigma);
    for (int i = 1; i <= 40; ++i) {
        const double j = greedy_price_J(du * static_cast<double>(i), sigma);
        const double slope = (j - prev) / du;
        CHECK(slope > 0.0);
        CHECK(slope < 1.0);
        prev = j;
    }
}

TEST_CASE("inverse round trips") {
    const double sigma = 0.25;
    for (double u : {0.0, 0.5, 1.0, 2.0}) {
        const double p = greedy_price_J(u, sigma);
        CHECK(inverse_J(p, sigma) == doctest::Approx(u).epsilon(1e-6));
    }
    CHECK(inverse_J(greedy_price_J(0.7, sigma), sigma) == doctest::Approx(0.7).epsilon(1e-6));
}

TEST_CASE("inverse is monotone") {
    const double sigma = 0.25;
    const double u1 = inverse_J(0.5, sigma);
    const double u2 = inverse_J(0.8, sigma);
    CHECK(u1 < u2);
}

TEST_CASE("inverse rejects prices below J(0)") {
    CHECK_THROWS_AS(inverse_J(0.05, 0.25), std::domain_error);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(greedy_price_J(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(greedy_price_J(0.5, -1.0), std::invalid_argument);
}
