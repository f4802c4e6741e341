#include "pricing/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pricing/bump.hpp"
#include "pricing/discrete_cdf.hpp"
#include "pricing/environments.hpp"
#include "pricing/exp4.hpp"
#include "pricing/gaussian_pricing.hpp"
#include "pricing/grid.hpp"
#include "pricing/harness.hpp"
#include "pricing/oracles.hpp"
#include "pricing/parameter_grid.hpp"
#include "pricing/policies.hpp"
#include "pricing/revenue.hpp"

namespace pricing {

PiecewiseCdf random_monotone_cdf(Rng& rng, bool allow_atom_at_left) {
    const int inner = 2 + static_cast<int>(rng.uniform_int(6));
    std::vector<double> knots{-1.0};
    for (int i = 0; i < inner; ++i) knots.push_back(rng.uniform(-1.0, 1.0));
    knots.push_back(1.0);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                knots.end());
    if (knots.back() < 1.0) knots.push_back(1.0);

    std::vector<double> values(knots.size());
    values.front() = allow_atom_at_left && rng.bernoulli(0.5) ? rng.uniform(0.0, 0.3) : 0.0;
    values.back() = 1.0;
    for (std::size_t i = 1; i + 1 < values.size(); ++i)
        values[i] = rng.uniform(values.front(), 1.0);
    std::sort(values.begin() + 1, values.end() - 1);
    for (std::size_t i = 1; i < values.size(); ++i) values[i] = std::max(values[i], values[i - 1]);
    PiecewiseCdf cdf{std::move(knots), std::move(values)};
    cdf.validate();
    return cdf;
}

namespace {

std::string fmt(double x) { return format_sig12(x); }

CheckResult check_rounding() {
    Rng rng(11);
    for (int i = 0; i < 20000; ++i) {
        const double g = rng.uniform(1e-4, 1.0);
        const double x = rng.uniform(-5.0, 5.0);
        const double lo = floor_round(x, g), hi = ceil_round(x, g);
        if (!(lo <= x + 1e-12 && x <= hi + 1e-12))
            return {"rounding sandwich/idempotence", false,
                    "floor/ceil fail to bracket x=" + fmt(x) + " g=" + fmt(g)};
        if (floor_round(lo, g) != lo)
            return {"rounding sandwich/idempotence", false, "floor not idempotent at " + fmt(x)};
    }
    return {"rounding sandwich/idempotence", true, "20000 random (x, gamma) pairs"};
}

CheckResult check_half_lipschitz() {
    Rng rng(12);
    for (int i = 0; i < 2000; ++i) {
        const PiecewiseCdf cdf = random_monotone_cdf(rng, true);
        const double u = rng.uniform(0.0, 2.0);
        double v1 = rng.uniform(0.0, 3.0), v2 = rng.uniform(0.0, 3.0);
        if (v1 < v2) std::swap(v1, v2);
        const double diff = revenue_g(v1, u, cdf) - revenue_g(v2, u, cdf);
        if (diff > v1 - v2 + 1e-12)
            return {"revenue half-Lipschitz", false,
                    "g(v1)-g(v2) = " + fmt(diff) + " > v1-v2 = " + fmt(v1 - v2)};
    }
    return {"revenue half-Lipschitz", true, "2000 random (F, u, v1 >= v2) samples"};
}

CheckResult check_cdf_counts() {
    const std::size_t c1 = enumerate_cdf_set(1.0).size();
    const std::size_t c2 = enumerate_cdf_set(0.5).size();
    const std::size_t c3 = enumerate_cdf_set(1.0 / 3.0).size();
    const bool ok = c1 == 3 && c2 == 15 && c3 == 84;
    return {"CDF family counts", ok,
            "gamma 1, 1/2, 1/3 -> " + std::to_string(c1) + ", " + std::to_string(c2) + ", " +
                std::to_string(c3) + " (want 3, 15, 84)"};
}

CheckResult check_sandwich() {
    Rng rng(13);
    const double g = 1.0 / 20.0;
    for (int trial = 0; trial < 100; ++trial) {
        const PiecewiseCdf cdf = random_monotone_cdf(rng, true);
        const DiscreteCdf hat = discretize_cdf(cdf, g);
        for (std::size_t j = 0; j + 1 < hat.num_points(); ++j) {
            const double v = hat.grid_point(j);
            const double f = cdf(v), fh = hat.value_at(j);
            if (!(fh <= f && f <= fh + g))
                return {"discretized-CDF sandwich", false,
                        "violated at v=" + fmt(v) + ": " + fmt(fh) + " vs " + fmt(f)};
        }
    }
    return {"discretized-CDF sandwich", true, "100 random F at gamma = 1/20, all grid points"};
}

CheckResult check_membership() {
    Rng rng(14);
    const double g = 1.0 / 3.0;
    const auto family = enumerate_cdf_set(g);
    for (int trial = 0; trial < 25; ++trial) {
        const DiscreteCdf hat = discretize_cdf(random_monotone_cdf(rng, true), g);
        if (std::find(family.begin(), family.end(), hat) == family.end())
            return {"discretization stays in the family", false, "missing member"};
    }
    return {"discretization stays in the family", true,
            "25 random discretizations found among the 84 members at gamma = 1/3"};
}

CheckResult check_increment_oracle() {
    Rng rng(15);
    const double gammas[] = {0.5, 0.25, 0.2, 0.1};
    for (int trial = 0; trial < 300; ++trial) {
        const double g = gammas[rng.uniform_int(4)];
        const DiscreteCdf cdf = discretize_cdf(random_monotone_cdf(rng, true), g);
        const double u = rng.uniform(0.0, 2.0);
        const auto got = lv_optimal_increment(u, cdf);
        // dense, segment-by-segment scan avoids an interpolation search
        double best_w = -1.0, best_v = (u - 1.0) * (1.0 - cdf.value_at(0));
        const double step = 1e-6;
        for (double w = -1.0; w <= 1.0 + 1e-12; w += step) {
            const double val = (u + w) * (1.0 - cdf(w));
            if (val > best_v) {
                best_v = val;
                best_w = w;
            }
        }
        if (std::abs(got.value - best_v) > 1e-9 || std::abs(got.w - best_w) > 2e-6)
            return {"increment vs dense-grid argmax", false,
                    "w " + fmt(got.w) + " vs " + fmt(best_w) + ", value " + fmt(got.value) +
                        " vs " + fmt(best_v)};
    }
    return {"increment vs dense-grid argmax", true,
            "300 random (u, F) pairs at 1e-6 resolution"};
}

CheckResult check_realizability() {
    Rng rng(16);
    double worst = -1e9;
    const int dims[] = {1, 2, 3};
    const int bounds[] = {1, 2};
    const double gammas[] = {0.1, 0.05};
    for (int trial = 0; trial < 200; ++trial) {
        const int d = dims[rng.uniform_int(3)];
        const int B = bounds[rng.uniform_int(2)];
        const double g = gammas[rng.uniform_int(2)];
        const double delta = g / std::sqrt(static_cast<double>(d));

        std::vector<double> theta(static_cast<std::size_t>(d));
        for (double& c : theta) c = rng.uniform01();
        const double target = rng.uniform(0.0, 1.0 - g);
        const double norm = l2_norm(theta);
        for (double& c : theta) c *= target / std::max(norm, 1e-12);

        std::vector<double> x(static_cast<std::size_t>(d));
        for (double& c : x) c = rng.uniform01();
        const double xr = rng.uniform(0.0, static_cast<double>(B));
        const double xn = l2_norm(x);
        for (double& c : x) c *= xr / std::max(xn, 1e-12);

        const PiecewiseCdf cdf = random_monotone_cdf(rng, false);
        const DiscreteCdf hat = discretize_cdf(cdf, g);
        const auto theta_hat = vector_ceil_round(theta, delta);
        GridSpec spec{delta, g, B, d, 1};
        const double price = lv_policy_price(theta_hat, hat, x, spec);

        const double u = dot(x, theta);
        const double got = revenue_g(price, u, cdf);
        const double eps = 1e-4;
        const double step = eps / static_cast<double>(B + 1);
        double opt = 0.0;
        for (double v = 0.0; v <= static_cast<double>(B + 1) + 1e-12; v += step)
            opt = std::max(opt, revenue_g(v, u, cdf));
        const double slack = opt - got - (3.0 * B + 5.0) * g - eps;
        worst = std::max(worst, slack);
        if (slack > 0.0)
            return {"policy realizability chain", false,
                    "loss " + fmt(opt - got) + " above (3B+5)gamma = " +
                        fmt((3.0 * B + 5.0) * g) + " + " + fmt(eps)};
    }
    return {"policy realizability chain", true,
            "200 random (theta*, F, x) triples; worst slack " + fmt(worst)};
}

CheckResult check_exp4_floor() {
    Rng rng(17);
    Exp4Agent agent(40, 7, 5000, 1.0, 99);
    std::vector<int> advice(40);
    std::vector<double> p;
    for (int t = 0; t < 2000; ++t) {
        for (int& a : advice) a = static_cast<int>(rng.uniform_int(7));
        agent.action_distribution(advice, p);
        double sum = 0.0;
        const double floor = agent.explore_rate() / 7.0;
        for (double pj : p) {
            if (pj < floor * (1.0 - 1e-12))
                return {"EXP-4 exploration floor", false, "p = " + fmt(pj) + " below " + fmt(floor)};
            sum += pj;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            return {"EXP-4 exploration floor", false, "distribution sums to " + fmt(sum)};
        const int a = agent.sample_action(p);
        agent.update(advice, a, p[static_cast<std::size_t>(a)], rng.uniform01());
    }
    return {"EXP-4 exploration floor", true,
            "2000 updates keep every action above explore_rate/K and sums at 1"};
}

CheckResult check_bump_suite() {
    // numeric Lipschitz constant over a uniform grid
    const double h = 1e-6;
    double max_slope = 0.0;
    for (int i = 0; i < 1000000; ++i) {
        const double v = static_cast<double>(i) * 1e-6;
        max_slope = std::max(max_slope, std::abs(bump(v + h) - bump(v)) / h);
    }
    if (max_slope > 6.001)
        return {"bump hard-instance shape", false, "Lipschitz " + fmt(max_slope) + " > 6.001"};

    const BumpInstance inst = sample_interval_chain(3, 2024);
    if (std::abs(inst.a[1] - 1.0 / 3.0) > 1e-15 || std::abs(inst.a[2] - 4.0 / 9.0) > 1e-15)
        return {"bump hard-instance shape", false, "forced chain prefix wrong"};

    // unimodality of f on a 1e5 grid
    double prev = 0.0;
    bool rising = true;
    const double fcap = 1.5 * inst.c_f;
    for (int i = 0; i <= 100000; ++i) {
        const double v = static_cast<double>(i) * 1e-5;
        const double f = f_eval(inst, v);
        if (f > fcap + 1e-15)
            return {"bump hard-instance shape", false, "f = " + fmt(f) + " above 1.5 c_f"};
        if (f > prev + 1e-15) {
            if (!rising)
                return {"bump hard-instance shape", false, "f rises again past its peak at v=" + fmt(v)};
        } else if (f < prev - 1e-15) {
            rising = false;
        }
        prev = f;
    }

    // d nonincreasing on [0, 1.2]; revenue v*d(v) = v up to b and D above
    double prev_d = 1.0 + 1e-15;
    for (int i = 0; i <= 120000; ++i) {
        const double v = static_cast<double>(i) * 1e-5;
        const double dv = demand_d(inst, v);
        if (dv > prev_d + 1e-12)
            return {"bump hard-instance shape", false, "d increases at v=" + fmt(v)};
        prev_d = dv;
        if (v <= inst.b && std::abs(v * dv - v) > 1e-12)
            return {"bump hard-instance shape", false, "revenue below b is not v"};
    }
    return {"bump hard-instance shape", true,
            "Lipschitz " + fmt(max_slope) + ", f unimodal <= 1.5 c_f, d nonincreasing"};
}

CheckResult check_greedy_calibration() {
    const double sigma = 0.25;
    double prev = greedy_price_J(0.0, sigma);
    for (int i = 1; i <= 40; ++i) {
        const double u = 0.05 * static_cast<double>(i);
        const double j = greedy_price_J(u, sigma);
        const double slope = (j - prev) / 0.05;
        if (!(slope > 0.0 && slope < 1.0))
            return {"greedy price calibration", false, "J' = " + fmt(slope) + " outside (0,1)"};
        prev = j;
    }
    Rng rng(18);
    const auto beta = default_beta_star(2);
    for (int trial = 0; trial < 40; ++trial) {
        const auto x = sample_sphere_quadrant(2, 1.0, rng);
        const double p_star = dot(x, beta);
        const double u = inverse_J(p_star, sigma);
        const auto opt = per_round_optimal_dense(
            u, [&](double w) { return normal_cdf(w / sigma); }, 2.0);
        if (std::abs(opt.price - p_star) > 1e-5)
            return {"greedy price calibration", false,
                    "optimal price " + fmt(opt.price) + " vs linear " + fmt(p_star)};
    }
    return {"greedy price calibration", true,
            "J' in (0,1) on [0,2]; 40 contexts have x.beta* optimal to 1e-5"};
}

CheckResult check_onehot() {
    const auto ctx = make_onehot_contexts(4, 100000, 77);
    std::vector<long long> counts(4, 0);
    for (const auto& x : ctx)
        for (int i = 0; i < 4; ++i)
            if (x[static_cast<std::size_t>(i)] == 1.0) ++counts[static_cast<std::size_t>(i)];
    for (long long c : counts) {
        const double freq = static_cast<double>(c) / 100000.0;
        if (std::abs(freq - 0.25) > 0.01)
            return {"one-hot context frequencies", false, "coordinate frequency " + fmt(freq)};
    }
    return {"one-hot context frequencies", true, "all coordinates within 0.25 +- 0.01"};
}

CheckResult check_run_determinism() {
    RunConfig cfg;
    cfg.T = 300;
    cfg.seed = 4242;
    const RegretRecord a = run_linear_exp4(cfg);
    const RegretRecord b = run_linear_exp4(cfg);
    std::ostringstream sa, sb;
    write_rounds_csv(sa, a);
    write_rounds_csv(sb, b);
    const bool ok = sa.str() == sb.str();
    return {"run determinism", ok,
            ok ? "two seeded runs byte-identical over 300 rounds" : "CSV outputs differ"};
}

} // namespace

std::vector<CheckResult> run_property_checks() {
    return {
        check_rounding(),       check_half_lipschitz(), check_cdf_counts(),
        check_sandwich(),       check_membership(),     check_increment_oracle(),
        check_realizability(),  check_exp4_floor(),     check_bump_suite(),
        check_greedy_calibration(), check_onehot(),     check_run_determinism(),
    };
}

} // namespace pricing
