#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pricing/grid.hpp"
#include "pricing/rng.hpp"

using namespace pricing;

TEST_CASE("floor rounding") {
    CHECK(floor_round(0.35, 0.1) == doctest::Approx(0.3));
    CHECK(floor_round(0.7, 0.1) == doctest::Approx(0.7));
    // integer-arithmetic oracle: floor(-3.5) = -4
    CHECK(floor_round(-0.35, 0.1) == doctest::Approx(-0.4));
    CHECK(floor_index(0.7, 0.1) == 7); // exact multiple snaps, no off-by-one
    CHECK_THROWS_AS(floor_round(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(floor_round(1.0, -0.5), std::invalid_argument);
}

TEST_CASE("ceil rounding") {
    CHECK(ceil_round(0.35, 0.1) == doctest::Approx(0.4));
    CHECK(ceil_round(1.0, 0.5) == doctest::Approx(1.0));
    CHECK(ceil_round(-0.35, 0.1) == doctest::Approx(-0.3)); // ceil(-3.5) = -3
    CHECK_THROWS_AS(ceil_round(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("vector rounding is componentwise") {
    const std::vector<double> a{0.35, 0.71};
    const auto fa = vector_floor_round(a, 0.1);
    CHECK(fa[0] == doctest::Approx(0.3));
    CHECK(fa[1] == doctest::Approx(0.7));

    const std::vector<double> b{0.5, 0.5};
    const auto fb = vector_floor_round(b, 0.5);
    CHECK(fb[0] == doctest::Approx(0.5));
    CHECK(fb[1] == doctest::Approx(0.5));

    const std::vector<double> c{0.9, 0.99};
    const auto fc = vector_floor_round(c, 0.25);
    CHECK(fc[0] == doctest::Approx(0.75));
    CHECK(fc[1] == doctest::Approx(0.75));
}

TEST_CASE("floor <= x <= ceil and idempotence on random inputs") {
    Rng rng(7);
    for (int i = 0; i < 50000; ++i) {
        const double g = rng.uniform(1e-4, 1.0);
        const double x = rng.uniform(-4.0, 4.0);
        const double lo = floor_round(x, g);
        const double hi = ceil_round(x, g);
        CHECK(lo <= x + 1e-12);
        CHECK(hi >= x - 1e-12);
        CHECK(floor_round(lo, g) == lo);
    }
}

TEST_CASE("snapping rescues accumulated float error at grid points") {
    // 0.1 summed ten times is not exactly 1.0; the snapped index still is
    double acc = 0.0;
    for (int i = 0; i < 10; ++i) acc += 0.1;
    CHECK(floor_index(acc, 0.1) == 10);
    CHECK(floor_round(acc, 0.1) == doctest::Approx(1.0));
}

TEST_CASE("grid spec validation") {
    GridSpec ok{0.5, 0.5, 1, 2, 100};
    CHECK_NOTHROW(ok.validate());
    GridSpec coarse{1.0, 1.0, 1, 1, 1};
    CHECK_NOTHROW(coarse.validate()); // delta = gamma = 1 is admissible

    GridSpec bad_delta{0.0, 0.5, 1, 2, 100};
    CHECK_THROWS_AS(bad_delta.validate(), std::invalid_argument);

    // the LV auto schedule satisfies delta*sqrt(d) <= gamma with equality
    GridSpec lv{0.25 / std::sqrt(2.0), 0.25, 1, 2, 256};
    CHECK_NOTHROW(lv.validate_lv());
    GridSpec lv_bad{0.25, 0.25, 1, 2, 256};
    CHECK_THROWS_AS(lv_bad.validate_lv(), std::invalid_argument);
}

TEST_CASE("grid_locate splits index and fraction") {
    auto [i1, f1] = grid_locate(0.35, 0.1);
    CHECK(i1 == 3);
    CHECK(f1 == doctest::Approx(0.5));
    auto [i2, f2] = grid_locate(0.7, 0.1);
    CHECK(i2 == 7);
    CHECK(f2 == 0.0);
}
