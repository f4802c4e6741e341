// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Heavier than the unit tests; the horizon sweeps dominate the runtime.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pricing/bump.hpp"
#include "pricing/discrete_cdf.hpp"
#include "pricing/environments.hpp"
#include "pricing/exp4.hpp"
#include "pricing/grid.hpp"
#include "pricing/harness.hpp"
#include "pricing/oracles.hpp"
#include "pricing/policies.hpp"
#include "pricing/revenue.hpp"
#include "pricing/rng.hpp"
#include "pricing/verify.hpp"

using namespace pricing;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << " — " << detail << std::endl;
    if (!pass) ++failures;
}

std::string fmt(double x) { return format_sig12(x); }

SweepTable run_reference_sweep(int d, int k_lo, int k_hi, int reps) {
    RunConfig base;
    base.algo = Algo::LinearExp4;
    base.env = EnvKind::GaussianGreedy;
    base.d = d;
    base.B = 1;
    base.sigma = 0.25;
    base.seed = 20240817;
    return sweep_T(base, k_lo, k_hi, reps, 0);
}

struct Envelope {
    double lo = 1e300, hi = -1e300, mean = 0.0;
};

Envelope envelope_ratios(const SweepTable& table, int d) {
    Envelope env;
    double sum = 0.0;
    for (std::size_t i = 0; i < table.Ts.size(); ++i) {
        const double t = static_cast<double>(table.Ts[i]);
        const double norm = std::cbrt(static_cast<double>(d)) * std::pow(t, 2.0 / 3.0) *
                            std::log(static_cast<double>(d) * t);
        const double ratio = table.mean_regret[i] / norm;
        env.lo = std::min(env.lo, ratio);
        env.hi = std::max(env.hi, ratio);
        sum += ratio;
    }
    env.mean = sum / static_cast<double>(table.Ts.size());
    return env;
}

void criterion_1_and_2() {
    const int reps = 16;
    const SweepTable table = run_reference_sweep(2, 27, 42, reps);
    const SlopeFit fit = fit_loglog_slope(table.Ts, table.mean_regret);
    report("criterion 1: regret slope reproduction", fit.slope >= 0.60 && fit.slope <= 0.74,
           "OLS slope " + fmt(fit.slope) + " over k=27..42, " + std::to_string(reps) +
               " reps (target [0.60, 0.74], r2 " + fmt(fit.r2) + ")");

    const Envelope env = envelope_ratios(table, 2);
    const double spread = std::max(env.hi - env.mean, env.mean - env.lo) / env.mean;
    report("criterion 2: regret envelope stability", spread <= 0.25,
           "regret/(d^{1/3}T^{2/3}ln(dT)) in [" + fmt(env.lo) + ", " + fmt(env.hi) +
               "], max deviation " + fmt(100.0 * spread) + "% of mean (allow 25%)");

    // module invariant: the envelope constant fitted per dimension over
    // T = 2^9..2^13 agrees across d in {1, 2} within +-25%. Per-point
    // T-stability is criterion 2's job; the joint per-point range is printed
    // alongside for completeness.
    const SweepTable t1 = run_reference_sweep(1, 27, 39, reps);
    const Envelope e1 = envelope_ratios(t1, 1);
    Envelope e2;
    {
        double sum = 0.0;
        std::size_t n = 0;
        for (std::size_t i = 0; i < table.Ts.size(); ++i) {
            if (table.ks[i] > 39) continue;
            const double t = static_cast<double>(table.Ts[i]);
            const double norm = std::cbrt(2.0) * std::pow(t, 2.0 / 3.0) * std::log(2.0 * t);
            const double r = table.mean_regret[i] / norm;
            e2.lo = std::min(e2.lo, r);
            e2.hi = std::max(e2.hi, r);
            sum += r;
            ++n;
        }
        e2.mean = sum / static_cast<double>(n);
    }
    const double mid = 0.5 * (e1.mean + e2.mean);
    const double spread_d = std::max(e1.mean - mid, e2.mean - mid) / mid;
    report("property: envelope constant stable across d in {1,2}", spread_d <= 0.25,
           "fitted constants d=1: " + fmt(e1.mean) + ", d=2: " + fmt(e2.mean) +
               " (deviation " + fmt(100.0 * spread_d) +
               "% of their mean, allow 25%); joint per-point range [" +
               fmt(std::min(e1.lo, e2.lo)) + ", " + fmt(std::max(e1.hi, e2.hi)) + "]");
}

void criterion_3_realizability() {
    Rng rng(160);
    const int dims[] = {1, 2, 3};
    const int bounds[] = {1, 2};
    const double gammas[] = {0.1, 0.05};
    int passed = 0;
    double worst_margin = -1e300;
    for (int trial = 0; trial < 200; ++trial) {
        const int d = dims[rng.uniform_int(3)];
        const int B = bounds[rng.uniform_int(2)];
        const double g = gammas[rng.uniform_int(2)];
        const double delta = g / std::sqrt(static_cast<double>(d));

        std::vector<double> theta(static_cast<std::size_t>(d));
        for (double& c : theta) c = rng.uniform01();
        const double norm = l2_norm(theta);
        const double target = rng.uniform(0.0, 1.0 - g);
        for (double& c : theta) c *= target / std::max(norm, 1e-12);

        std::vector<double> x(static_cast<std::size_t>(d));
        for (double& c : x) c = rng.uniform01();
        const double xn = l2_norm(x);
        const double xr = rng.uniform(0.0, static_cast<double>(B));
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

        const double margin = (3.0 * B + 5.0) * g + eps - (opt - got);
        worst_margin = (trial == 0) ? margin : std::min(worst_margin, margin);
        if (margin >= 0.0) ++passed;
    }
    report("criterion 3: realizability chain", passed == 200,
           std::to_string(passed) + "/200 triples within (3B+5)gamma + 1e-4; tightest margin " +
               fmt(worst_margin));
}

void criterion_4_counts() {
    const std::size_t c1 = enumerate_cdf_set(1.0).size();
    const std::size_t c2 = enumerate_cdf_set(0.5).size();
    const std::size_t c3 = enumerate_cdf_set(1.0 / 3.0).size();
    report("criterion 4: CDF family counting", c1 == 3 && c2 == 15 && c3 == 84,
           "gamma = 1, 1/2, 1/3 give " + std::to_string(c1) + ", " + std::to_string(c2) + ", " +
               std::to_string(c3) + " members (want 3, 15, 84)");
}

void criterion_5_sandwich() {
    Rng rng(130);
    const double g = 1.0 / 20.0;
    int bad = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const PiecewiseCdf cdf = random_monotone_cdf(rng, true);
        const DiscreteCdf hat = discretize_cdf(cdf, g);
        for (std::size_t j = 0; j + 1 < hat.num_points(); ++j) {
            const double v = hat.grid_point(j);
            const double f = cdf(v);
            if (!(hat.value_at(j) <= f && f <= hat.value_at(j) + g)) ++bad;
        }
    }
    report("criterion 5: sandwich property", bad == 0,
           "100 random monotone F at gamma = 1/20; " + std::to_string(bad) +
               " grid-point violations");
}

void criterion_6_bump() {
    std::vector<std::string> problems;

    const double h = 1e-6;
    double max_slope = 0.0;
    for (int i = 0; i < 1000000; ++i) {
        const double v = static_cast<double>(i) * 1e-6;
        max_slope = std::max(max_slope, std::abs(bump(v + h) - bump(v)) / h);
    }
    if (max_slope > 6.001) problems.push_back("Lipschitz " + fmt(max_slope));

    const BumpInstance inst = sample_interval_chain(3, 4096);
    if (std::abs(inst.a[1] - 1.0 / 3.0) > 1e-15 || std::abs(inst.a[2] - 4.0 / 9.0) > 1e-15)
        problems.push_back("chain prefix not [1/3,2/3],[4/9,5/9]");

    bool rising = true;
    double prev = 0.0;
    for (int i = 0; i <= 100000; ++i) {
        const double v = static_cast<double>(i) * 1e-5;
        const double f = f_eval(inst, v);
        if (f > 1.5 * inst.c_f + 1e-15) {
            problems.push_back("f above 1.5 c_f");
            break;
        }
        if (f > prev + 1e-15 && !rising) {
            problems.push_back("f not unimodal");
            break;
        }
        if (f < prev - 1e-15) rising = false;
        prev = f;
    }

    double prev_d = 1.0 + 1e-12;
    for (int i = 0; i <= 120000; ++i) {
        const double v = static_cast<double>(i) * 1e-5;
        const double dv = demand_d(inst, v);
        if (dv > prev_d + 1e-12) {
            problems.push_back("d(v) increases at v = " + fmt(v));
            break;
        }
        prev_d = dv;
    }

    // D(v)/v nonincreasing is d(v) itself; revenue below b equals the price
    for (int i = 1; i <= 1000; ++i) {
        const double v = inst.b * static_cast<double>(i) / 1000.0;
        if (std::abs(v * demand_d(inst, v) - v) > 1e-12) {
            problems.push_back("revenue below b is not v");
            break;
        }
    }

    std::vector<long long> counts(27, 0);
    Rng seeder(61);
    for (int i = 0; i < 100000; ++i) {
        const BumpInstance c = sample_interval_chain(3, seeder.next_u64());
        const double lo = 4.0 / 9.0 + 1.0 / 27.0;
        const int slot = static_cast<int>(std::lround((c.a[3] - lo) / level_width(3)));
        ++counts[static_cast<std::size_t>(slot)];
    }
    const double expected = 100000.0 / 27.0;
    double chi_sq = 0.0;
    for (long long c : counts)
        chi_sq +=
            (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
    if (chi_sq >= 45.642) // 0.99 quantile, 26 dof
        problems.push_back("Q_3 chi-square " + fmt(chi_sq));

    std::string detail = "Lipschitz " + fmt(max_slope) + " <= 6.001, f unimodal <= 1.5 c_f, d "
                         "nonincreasing, chain prefix forced, Q_3 chi-square " +
                         fmt(chi_sq) + " < 45.642";
    if (!problems.empty()) {
        detail = problems.front();
        for (std::size_t i = 1; i < problems.size(); ++i) detail += "; " + problems[i];
    }
    report("criterion 6: bump-instance invariants", problems.empty(), detail);
}

void criterion_7_exp4_sanity() {
    const long long T = 100000;
    const double means[2] = {0.6, 0.4};
    double total_regret = 0.0;
    for (int seedling = 0; seedling < 20; ++seedling) {
        Exp4Agent agent(2, 2, T, 1.0, mix_seed(5150, 7, static_cast<std::uint64_t>(seedling)));
        Rng env(mix_seed(5150, 8, static_cast<std::uint64_t>(seedling)));
        const std::vector<int> advice{0, 1}; // two constant policies
        std::vector<double> p;
        double reward_sum = 0.0;
        for (long long t = 0; t < T; ++t) {
            agent.action_distribution(advice, p);
            const int a = agent.sample_action(p);
            const double r = env.bernoulli(means[a]) ? 1.0 : 0.0;
            agent.update(advice, a, p[static_cast<std::size_t>(a)], r);
            reward_sum += r;
        }
        total_regret += 0.6 * static_cast<double>(T) - reward_sum;
    }
    const double mean_regret = total_regret / 20.0;
    const double budget = 4.0 * std::sqrt(static_cast<double>(T) * 2.0 * std::log(2.0));
    report("criterion 7: EXP-4 bandit sanity", mean_regret <= budget,
           "mean regret " + fmt(mean_regret) + " over 20 seeds (budget 4*sqrt(T K ln N) = " +
               fmt(budget) + ")");
}

void criterion_8_d2_trend() {
    const long long T = 5000;
    double early_sum = 0.0, late_sum = 0.0;
    std::size_t policies = 0;
    for (int seedling = 0; seedling < 20; ++seedling) {
        RunConfig cfg;
        cfg.algo = Algo::D2Exp4;
        cfg.env = EnvKind::LinearValuation;
        cfg.d = 1;
        cfg.B = 1;
        cfg.T = T;
        cfg.delta = 0.25;
        cfg.gamma = 0.5;
        cfg.seed = mix_seed(8080, 1, static_cast<std::uint64_t>(seedling));
        cfg.theta_star = {0.75};
        cfg.contexts = "ones";
        cfg.noise.kind = NoiseSpec::Kind::Discrete;
        cfg.noise.cdf = DiscreteCdf(0.5, {0, 0, 1, 2, 2});
        const RegretRecord rec = run_d2_exp4(cfg);
        policies = rec.num_policies;
        const long long q = T / 4;
        early_sum += rec.rounds[static_cast<std::size_t>(q) - 1].cum_regret /
                     static_cast<double>(q);
        late_sum += (rec.rounds[static_cast<std::size_t>(T) - 1].cum_regret -
                     rec.rounds[static_cast<std::size_t>(3 * q) - 1].cum_regret) /
                    static_cast<double>(q);
    }
    const double early = early_sum / 20.0;
    const double late = late_sum / 20.0;
    const double cap = (3.0 * 1.0 + 5.0) * 0.5 + 0.05;
    report("criterion 8: D2-EXP4 toy no-regret trend",
           late < early && late <= cap && policies == 75,
           "per-round LV regret first quarter " + fmt(early) + " -> final quarter " + fmt(late) +
               " (cap " + fmt(cap) + ", catalog " + std::to_string(policies) + " policies)");
}

void criterion_9_determinism() {
    RunConfig cfg;
    cfg.algo = Algo::LinearExp4;
    cfg.env = EnvKind::GaussianGreedy;
    cfg.T = 800;
    cfg.seed = 13579;
    const RegretRecord a = run_linear_exp4(cfg);
    const RegretRecord b = run_linear_exp4(cfg);
    std::ostringstream sa, sb;
    write_rounds_csv(sa, a);
    write_rounds_csv(sb, b);
    report("criterion 9: run determinism", sa.str() == sb.str(),
           sa.str() == sb.str() ? "identical config and seed give byte-identical CSV (800 rounds)"
                                : "CSV bytes differ");
}

} // namespace

int main() {
    criterion_4_counts();
    criterion_5_sandwich();
    criterion_3_realizability();
    criterion_6_bump();
    criterion_7_exp4_sanity();
    criterion_8_d2_trend();
    criterion_9_determinism();
    criterion_1_and_2();
    std::cout << (failures == 0 ? "all acceptance criteria passed"
                                : std::to_string(failures) + " criteria FAILED")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
