#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pricing/gaussian_pricing.hpp"
#include "pricing/oracles.hpp"
#include "pricing/rng.hpp"
#include "pricing/verify.hpp"

using namespace pricing;

TEST_CASE("per-round optimum under uniform noise") {
    NoiseSpec uni{NoiseSpec::Kind::Uniform, 0.0, std::nullopt};
    const auto opt = per_round_optimal(0.5, uni, 2.0);
    CHECK(opt.price == doctest::Approx(0.75));
    CHECK(opt.value == doctest::Approx(0.28125));
}

TEST_CASE("per-round optimum under gaussian noise matches the greedy price") {
    const double sigma = 0.25;
    for (double u : {0.2, 0.6, 1.1}) {
        const auto opt = per_round_optimal_dense(
            u, [&](double w) { return normal_cdf(w / sigma); }, 2.0);
        CHECK(opt.price == doctest::Approx(greedy_price_J(u, sigma)).epsilon(1e-5));
    }
}

TEST_CASE("per-round optimum under a point mass: deterministic valuation") {
    NoiseSpec none{NoiseSpec::Kind::None, 0.0, std::nullopt};
    const auto opt = per_round_optimal(0.6, none, 2.0);
    CHECK(opt.price == doctest::Approx(0.6).epsilon(1e-9));
    CHECK(opt.value == doctest::Approx(0.6).epsilon(1e-9));
}

TEST_CASE("discrete-CDF optimum agrees with a dense scan") {
    Rng rng(51);
    for (int trial = 0; trial < 100; ++trial) {
        const DiscreteCdf cdf = discretize_cdf(random_monotone_cdf(rng, false), 0.1);
        const double u = rng.uniform(0.0, 1.5);
        const auto got = per_round_optimal(u, cdf, 2.0);
        const auto dense = per_round_optimal_dense(
            u, [&](double w) { return cdf(w); }, 2.0);
        CHECK(got.value == doctest::Approx(dense.value).epsilon(1e-8));
    }
}

TEST_CASE("hindsight beta: single round") {
    const auto grid = enumerate_parameter_grid(0.1, 2);
    const auto fit = best_fixed_beta({{1.0, 0.0}}, {0.9}, grid, 1.0);
    CHECK(fit.beta[0] == doctest::Approx(0.9));
    CHECK(fit.beta[1] == 0.0); // lexicographic tie-break
    CHECK(fit.total == doctest::Approx(0.9));
}

TEST_CASE("hindsight beta: nothing sellable") {
    const auto grid = enumerate_parameter_grid(0.25, 1);
    const auto fit = best_fixed_beta({{1.0}, {1.0}}, {-0.5, -1.0}, grid, 1.0);
    CHECK(fit.total == 0.0);
    CHECK(fit.beta == std::vector<double>{0.0});
}

TEST_CASE("hindsight beta: constant environment") {
    const auto grid = enumerate_parameter_grid(0.25, 1);
    std::vector<std::vector<double>> xs(40, {1.0});
    std::vector<double> ys(40, 0.75);
    const auto fit = best_fixed_beta(xs, ys, grid, 1.0);
    CHECK(fit.beta == std::vector<double>{0.75});
    CHECK(fit.total == doctest::Approx(0.75 * 40.0));
    for (double r : fit.per_round) CHECK(r == doctest::Approx(0.75));
}

TEST_CASE("hindsight oracle validation and gap bound") {
    const auto grid = enumerate_parameter_grid(0.25, 1);
    CHECK_THROWS_AS(best_fixed_beta({}, {}, grid, 1.0), std::invalid_argument);
    const auto fit = best_fixed_beta({{1.0}}, {1.0}, grid, 2.0);
    CHECK(fit.gap_bound == doctest::Approx(1.0 * 2.0 * 0.25 * 1.0));
}
