#include "pricing/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "pricing/exp4.hpp"
#include "pricing/gaussian_pricing.hpp"
#include "pricing/oracles.hpp"
#include "pricing/revenue.hpp"

namespace pricing {

namespace {

using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

constexpr std::uint64_t kEnvStream = 0xE21;
constexpr std::uint64_t kAgentStream = 0xA63;
constexpr std::uint64_t kContextStream = 0xC0E;

} // namespace

double snap_unit_fraction(double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");
    if (gamma >= 1.0) return 1.0;
    const double n = std::ceil(1.0 / gamma - 1e-9);
    return 1.0 / n;
}

std::vector<double> default_beta_star(int d) {
    // (3, 4, 3, 4, ...) scaled to unit norm; gives the (0.6, 0.8) pair at d = 2
    std::vector<double> b(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) b[static_cast<std::size_t>(i)] = (i % 2 == 0) ? 3.0 : 4.0;
    const double norm = l2_norm(b);
    for (double& x : b) x /= norm;
    return b;
}

std::vector<double> default_theta_star(int d) {
    std::vector<double> t = default_beta_star(d);
    for (double& x : t) x *= 0.75;
    return t;
}

ResolvedParams resolve_params(const RunConfig& cfg) {
    ResolvedParams out;
    out.auto_schedule = cfg.delta <= 0.0 || cfg.gamma <= 0.0;
    const double t = static_cast<double>(cfg.T);
    const double d = static_cast<double>(cfg.d);

    if (cfg.algo == Algo::LinearExp4) {
        out.delta_raw =
            cfg.delta > 0.0 ? cfg.delta : std::pow(t, -1.0 / 3.0) * std::pow(d, -1.0 / 6.0);
        out.gamma_raw =
            cfg.gamma > 0.0 ? cfg.gamma : std::pow(t, -1.0 / 3.0) * std::pow(d, 1.0 / 3.0);
        out.spec.delta = std::min(out.delta_raw, 1.0);
        out.spec.gamma = snap_unit_fraction(out.gamma_raw);
    } else {
        out.gamma_raw = cfg.gamma > 0.0 ? cfg.gamma : std::pow(t, -1.0 / 4.0);
        out.spec.gamma = snap_unit_fraction(out.gamma_raw);
        // keep delta * sqrt(d) <= gamma after snapping
        out.delta_raw = cfg.delta > 0.0 ? cfg.delta : out.spec.gamma / std::sqrt(d);
        out.spec.delta = std::min(out.delta_raw, 1.0);
    }
    out.spec.feature_bound = cfg.B;
    out.spec.dim = cfg.d;
    out.spec.horizon = cfg.T;
    if (cfg.algo == Algo::LinearExp4)
        out.spec.validate();
    else
        out.spec.validate_lv();
    return out;
}

namespace {

std::vector<std::vector<double>> build_context_pool(const RunConfig& cfg, double radius) {
    if (cfg.contexts == "onehot")
        return make_onehot_contexts(cfg.d, cfg.T, mix_seed(cfg.seed, kContextStream, 0));
    if (cfg.contexts == "ones") {
        std::vector<double> x(static_cast<std::size_t>(cfg.d),
                              radius / std::sqrt(static_cast<double>(cfg.d)));
        return {x};
    }
    if (cfg.contexts == "sphere")
        return make_sphere_contexts(cfg.d, radius, cfg.T, mix_seed(cfg.seed, kContextStream, 0));
    throw std::invalid_argument("unknown context mode: " + cfg.contexts);
}

struct LoopResult {
    std::vector<double> prices;
    std::vector<double> rewards;
    std::vector<char> solds;
    std::vector<std::vector<double>> xs; // kept only when rounds are recorded
    double total_reward = 0.0;
};

template <class Env>
LoopResult run_loop(Env& env, const PolicyCatalog& catalog, Exp4Agent& agent, long long T,
                    bool keep_contexts) {
    LoopResult res;
    res.prices.reserve(static_cast<std::size_t>(T));
    res.rewards.reserve(static_cast<std::size_t>(T));
    res.solds.reserve(static_cast<std::size_t>(T));
    std::vector<int> advice;
    std::vector<double> p;
    for (long long t = 0; t < T; ++t) {
        const auto x = env.next_context(t);
        catalog.advice(x, advice);
        agent.action_distribution(advice, p);
        const int a = agent.sample_action(p);
        const double price = catalog.action_price(a);
        const bool sold = env.post_price(t, price);
        const double reward = sold ? price : 0.0;
        agent.update(advice, a, p[static_cast<std::size_t>(a)], reward);
        res.prices.push_back(price);
        res.rewards.push_back(reward);
        res.solds.push_back(sold ? 1 : 0);
        if (keep_contexts) res.xs.emplace_back(x.begin(), x.end());
        res.total_reward += reward;
    }
    return res;
}

void fill_rounds(RegretRecord& rec, const LoopResult& loop,
                 const std::vector<double>& benchmark) {
    if (!rec.config.record_rounds) return;
    rec.rounds.resize(loop.prices.size());
    double cum = 0.0;
    for (std::size_t t = 0; t < loop.prices.size(); ++t) {
        cum += benchmark[t] - loop.rewards[t];
        rec.rounds[t] = {make_round(static_cast<long long>(t), loop.xs[t], loop.prices[t],
                                    loop.solds[t] != 0),
                         benchmark[t], cum};
    }
}

// cum_regret for LV rows tracks the analytic ex-ante sum, not
// benchmark - realized reward.
void fill_rounds_lv(RegretRecord& rec, const LoopResult& loop,
                    const std::vector<double>& opt_values,
                    const std::vector<double>& per_round_regret) {
    if (!rec.config.record_rounds) return;
    rec.rounds.resize(loop.prices.size());
    double cum = 0.0;
    for (std::size_t t = 0; t < loop.prices.size(); ++t) {
        cum += per_round_regret[t];
        rec.rounds[t] = {make_round(static_cast<long long>(t), loop.xs[t], loop.prices[t],
                                    loop.solds[t] != 0),
                         opt_values[t], cum};
    }
}

} // namespace

double compute_empirical_exante_regret(const std::vector<double>& agent_rewards,
                                       const std::vector<double>& benchmark_rewards) {
    if (agent_rewards.size() != benchmark_rewards.size())
        throw std::invalid_argument("reward series lengths differ");
    double s = 0.0;
    for (std::size_t t = 0; t < agent_rewards.size(); ++t)
        s += benchmark_rewards[t] - agent_rewards[t];
    return s;
}

std::vector<double> compute_lv_regret(const std::vector<double>& prices,
                                      const std::vector<double>& noiseless_valuations,
                                      const NoiseSpec& noise, double price_cap) {
    if (prices.size() != noiseless_valuations.size())
        throw std::invalid_argument("price and valuation series lengths differ");
    std::vector<double> regret(prices.size());
    // context pools repeat u values; cache the per-u optimum
    std::unordered_map<long long, PriceOpt> cache;
    for (std::size_t t = 0; t < prices.size(); ++t) {
        const double u = noiseless_valuations[t];
        long long bits;
        static_assert(sizeof(bits) == sizeof(u));
        std::memcpy(&bits, &u, sizeof(bits));
        auto it = cache.find(bits);
        if (it == cache.end())
            it = cache.emplace(bits, per_round_optimal(u, noise, price_cap)).first;
        const double got = revenue_g(prices[t], u, [&](double w) { return noise.cdf_value(w); });
        regret[t] = it->second.value - got;
    }
    return regret;
}

RegretRecord run_linear_exp4(const RunConfig& cfg) {
    const auto start = clock_type::now();
    RegretRecord rec;
    rec.config = cfg;
    rec.params = resolve_params(cfg);
    const GridSpec& spec = rec.params.spec;

    const auto catalog = PolicyCatalog::build(PolicyKind::LP, spec, cfg.enumeration_cap);
    Exp4Agent agent(catalog.size(), catalog.num_actions(), cfg.T,
                    static_cast<double>(cfg.B), mix_seed(cfg.seed, kAgentStream, 0));
    rec.num_policies = catalog.size();
    rec.num_actions = catalog.num_actions();

    if (cfg.env == EnvKind::GaussianGreedy) {
        std::vector<double> beta = cfg.beta_star.empty() ? default_beta_star(cfg.d) : cfg.beta_star;
        std::vector<std::vector<double>> fixed;
        if (cfg.contexts != "sphere") fixed = build_context_pool(cfg, cfg.B);
        GaussianGreedyEnv env(beta, cfg.sigma, cfg.d, cfg.B, mix_seed(cfg.seed, kEnvStream, 0),
                              std::move(fixed));
        const LoopResult loop = run_loop(env, catalog, agent, cfg.T, cfg.record_rounds);
        rec.total_reward = loop.total_reward;

        rec.final_regret_exante =
            compute_empirical_exante_regret(loop.rewards, env.benchmark_rewards());
        double analytic = 0.0;
        for (std::size_t t = 0; t < loop.prices.size(); ++t) {
            const double u = env.noiseless_valuations()[t];
            const double p_star = env.benchmark_prices()[t];
            analytic += p_star * (1.0 - normal_cdf((p_star - u) / cfg.sigma)) -
                        loop.prices[t] * (1.0 - normal_cdf((loop.prices[t] - u) / cfg.sigma));
        }
        rec.final_regret_analytic = analytic;
        rec.final_regret = *rec.final_regret_exante;
        if (cfg.hindsight_oracle) {
            const auto oracle_grid = enumerate_parameter_grid(
                spec.delta / cfg.oracle_refine, cfg.d, cfg.enumeration_cap);
            const auto fit = best_fixed_beta(env.seen_contexts(), env.realized_valuations(),
                                             oracle_grid, cfg.B);
            rec.hindsight_total = fit.total;
            rec.hindsight_beta = fit.beta;
            rec.oracle_gap_bound = fit.gap_bound;
        }
        fill_rounds(rec, loop, env.benchmark_rewards());
        rec.notes = "contexts=" + cfg.contexts + " (implementation-chosen); beta*=default-scaled";
    } else if (cfg.env == EnvKind::LinearValuation) {
        std::vector<double> theta =
            cfg.theta_star.empty() ? default_theta_star(cfg.d) : cfg.theta_star;
        LinearValuationEnv env(theta, cfg.noise, build_context_pool(cfg, cfg.B), cfg.B,
                               mix_seed(cfg.seed, kEnvStream, 0));
        const LoopResult loop = run_loop(env, catalog, agent, cfg.T, cfg.record_rounds);
        rec.total_reward = loop.total_reward;

        // ex-post regret against the hindsight best fixed linear policy
        const auto oracle_grid = enumerate_parameter_grid(spec.delta / cfg.oracle_refine,
                                                          cfg.d, cfg.enumeration_cap);
        const auto fit =
            best_fixed_beta(env.seen_contexts(), env.realized_valuations(), oracle_grid, cfg.B);
        rec.hindsight_total = fit.total;
        rec.hindsight_beta = fit.beta;
        rec.oracle_gap_bound = fit.gap_bound;
        rec.final_regret = fit.total - loop.total_reward;
        fill_rounds(rec, loop, fit.per_round);
    } else {
        throw std::invalid_argument("run_linear_exp4 expects a gaussian or linear environment");
    }

    rec.wall_ms = elapsed_ms(start);
    return rec;
}

RegretRecord run_d2_exp4(const RunConfig& cfg) {
    const auto start = clock_type::now();
    if (cfg.env != EnvKind::LinearValuation)
        throw std::invalid_argument("D2-EXP4 runs against the linear-valuation environment");

    RegretRecord rec;
    rec.config = cfg;
    rec.params = resolve_params(cfg);
    const GridSpec& spec = rec.params.spec;

    const auto catalog = PolicyCatalog::build(PolicyKind::LV, spec, cfg.max_policies);
    Exp4Agent agent(catalog.size(), catalog.num_actions(), cfg.T,
                    static_cast<double>(cfg.B + 1), mix_seed(cfg.seed, kAgentStream, 0));
    rec.num_policies = catalog.size();
    rec.num_actions = catalog.num_actions();

    std::vector<double> theta = cfg.theta_star.empty() ? default_theta_star(cfg.d) : cfg.theta_star;
    LinearValuationEnv env(theta, cfg.noise, build_context_pool(cfg, cfg.B), cfg.B,
                           mix_seed(cfg.seed, kEnvStream, 0));
    const LoopResult loop = run_loop(env, catalog, agent, cfg.T, cfg.record_rounds);
    rec.total_reward = loop.total_reward;

    std::vector<double> us(loop.prices.size());
    for (std::size_t t = 0; t < us.size(); ++t) us[t] = env.noiseless_valuation(static_cast<long long>(t));
    const auto regret = compute_lv_regret(loop.prices, us, cfg.noise,
                                          static_cast<double>(cfg.B + 1));
    double total = 0.0;
    std::vector<double> opt_values(regret.size());
    for (std::size_t t = 0; t < regret.size(); ++t) {
        total += regret[t];
        opt_values[t] = regret[t] + revenue_g(loop.prices[t], us[t], [&](double w) {
                            return cfg.noise.cdf_value(w);
                        });
    }
    rec.final_regret = total;
    rec.final_regret_analytic = total;
    fill_rounds_lv(rec, loop, opt_values, regret);

    rec.wall_ms = elapsed_ms(start);
    return rec;
}

RegretRecord run_bump_exp4(const RunConfig& cfg) {
    const auto start = clock_type::now();
    RegretRecord rec;
    rec.config = cfg;
    RunConfig lp = cfg;
    lp.algo = Algo::LinearExp4;
    lp.d = 1;
    lp.B = 1;
    rec.params = resolve_params(lp);
    const GridSpec& spec = rec.params.spec;

    const auto catalog = PolicyCatalog::build(PolicyKind::LP, spec, cfg.enumeration_cap);
    Exp4Agent agent(catalog.size(), catalog.num_actions(), cfg.T, 1.0,
                    mix_seed(cfg.seed, kAgentStream, 0));
    rec.num_policies = catalog.size();
    rec.num_actions = catalog.num_actions();

    BumpEnv env(sample_interval_chain(cfg.bump_depth, mix_seed(cfg.seed, kEnvStream, 1),
                                      cfg.bump_cf),
                mix_seed(cfg.seed, kEnvStream, 0));
    const LoopResult loop = run_loop(env, catalog, agent, cfg.T, cfg.record_rounds);
    rec.total_reward = loop.total_reward;

    const double opt = env.optimal_expected_revenue();
    std::vector<double> benchmark(loop.prices.size(), opt);
    double analytic = 0.0;
    for (std::size_t t = 0; t < loop.prices.size(); ++t)
        analytic += opt - loop.prices[t] * env.accept_probability(loop.prices[t]);
    rec.final_regret = compute_empirical_exante_regret(loop.rewards, benchmark);
    rec.final_regret_analytic = analytic;
    fill_rounds(rec, loop, benchmark);
    rec.notes = "hard-instance chain: " + serialize(env.instance());

    rec.wall_ms = elapsed_ms(start);
    return rec;
}

long long sweep_horizon(int k) {
    return static_cast<long long>(std::floor(std::pow(2.0, static_cast<double>(k) / 3.0) + 1e-9));
}

SweepTable sweep_T(const RunConfig& base, int k_lo, int k_hi, int reps, int threads) {
    if (k_hi < k_lo) throw std::invalid_argument("empty sweep range");
    if (reps < 1) throw std::invalid_argument("need at least one repetition");

    const int nk = k_hi - k_lo + 1;
    SweepTable table;
    table.rows.resize(static_cast<std::size_t>(nk) * static_cast<std::size_t>(reps));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t job = next.fetch_add(1);
            if (job >= table.rows.size()) return;
            const int k = k_lo + static_cast<int>(job) / reps;
            const int rep = static_cast<int>(job) % reps;
            RunConfig cfg = base;
            cfg.T = sweep_horizon(k);
            cfg.seed = mix_seed(base.seed, static_cast<std::uint64_t>(k),
                                static_cast<std::uint64_t>(rep));
            cfg.record_rounds = false;
            cfg.hindsight_oracle = false;
            cfg.out_path.clear();
            const RegretRecord rec = run_linear_exp4(cfg);
            table.rows[job] = {k, cfg.T, rep, rec.final_regret, rec.wall_ms};
        }
    };

    int n_threads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::max(1, std::min<int>(n_threads, static_cast<int>(table.rows.size())));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads) - 1);
    for (int i = 1; i < n_threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    table.ks.resize(static_cast<std::size_t>(nk));
    table.Ts.resize(static_cast<std::size_t>(nk));
    table.mean_regret.resize(static_cast<std::size_t>(nk));
    table.stderr_regret.resize(static_cast<std::size_t>(nk));
    for (int i = 0; i < nk; ++i) {
        const int k = k_lo + i;
        double sum = 0.0, sum_sq = 0.0;
        for (int rep = 0; rep < reps; ++rep) {
            const double r =
                table.rows[static_cast<std::size_t>(i) * static_cast<std::size_t>(reps) +
                           static_cast<std::size_t>(rep)]
                    .final_regret;
            sum += r;
            sum_sq += r * r;
        }
        const double mean = sum / reps;
        const double var =
            reps > 1 ? std::max(0.0, (sum_sq - reps * mean * mean) / (reps - 1)) : 0.0;
        table.ks[static_cast<std::size_t>(i)] = k;
        table.Ts[static_cast<std::size_t>(i)] = sweep_horizon(k);
        table.mean_regret[static_cast<std::size_t>(i)] = mean;
        table.stderr_regret[static_cast<std::size_t>(i)] = std::sqrt(var / reps);
    }
    return table;
}

SlopeFit fit_loglog_slope(const std::vector<long long>& Ts,
                          const std::vector<double>& mean_regret) {
    if (Ts.size() != mean_regret.size())
        throw std::invalid_argument("sweep table lengths differ");
    std::vector<double> lx, ly;
    SlopeFit fit;
    for (std::size_t i = 0; i < Ts.size(); ++i) {
        if (!(mean_regret[i] > 0.0)) {
            ++fit.points_dropped;
            continue;
        }
        lx.push_back(std::log(static_cast<double>(Ts[i])));
        ly.push_back(std::log(mean_regret[i]));
    }
    if (lx.size() < 3)
        throw std::invalid_argument("slope fit needs at least 3 points with positive regret");

    const double n = static_cast<double>(lx.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
        syy += (ly[i] - my) * (ly[i] - my);
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r2 = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    fit.points_used = static_cast<int>(lx.size());
    return fit;
}

std::string format_sig12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_rounds_csv(std::ostream& out, const RegretRecord& record) {
    out << "t,price,sold,reward,benchmark,cum_regret\n";
    for (const auto& r : record.rounds)
        out << r.round.t << ',' << format_sig12(r.round.price_posted) << ','
            << (r.round.sold ? 1 : 0) << ',' << format_sig12(r.round.reward) << ','
            << format_sig12(r.benchmark) << ',' << format_sig12(r.cum_regret) << '\n';
}

void write_sweep_csv(std::ostream& out, const SweepTable& table) {
    out << "k,T,rep,final_regret,wall_ms\n";
    for (const auto& r : table.rows)
        out << r.k << ',' << r.T << ',' << r.rep << ',' << format_sig12(r.final_regret) << ','
            << format_sig12(r.wall_ms) << '\n';
}

namespace {

nlohmann::json config_json(const RunConfig& cfg) {
    return {
        {"algo", cfg.algo == Algo::LinearExp4 ? "linear-exp4" : "d2-exp4"},
        {"env", cfg.env == EnvKind::GaussianGreedy
                    ? "gaussian-greedy"
                    : (cfg.env == EnvKind::LinearValuation ? "linear-valuation" : "bump")},
        {"d", cfg.d},
        {"B", cfg.B},
        {"T", cfg.T},
        {"delta", cfg.delta},
        {"gamma", cfg.gamma},
        {"sigma", cfg.sigma},
        {"seed", cfg.seed},
        {"contexts", cfg.contexts},
        {"noise", cfg.noise.name()},
        {"bump_depth", cfg.bump_depth},
    };
}

} // namespace

std::string record_to_json(const RegretRecord& record) {
    nlohmann::json j;
    j["config"] = config_json(record.config);
    j["resolved"] = {{"delta", record.params.spec.delta},
                     {"gamma", record.params.spec.gamma},
                     {"delta_raw", record.params.delta_raw},
                     {"gamma_raw", record.params.gamma_raw},
                     {"auto_schedule", record.params.auto_schedule}};
    j["num_policies"] = record.num_policies;
    j["num_actions"] = record.num_actions;
    j["total_reward"] = record.total_reward;
    j["final_regret"] = record.final_regret;
    if (record.final_regret_exante) j["final_regret_exante"] = *record.final_regret_exante;
    if (record.final_regret_analytic) j["final_regret_analytic"] = *record.final_regret_analytic;
    if (record.hindsight_total) {
        j["hindsight_total"] = *record.hindsight_total;
        j["hindsight_beta"] = record.hindsight_beta;
        j["oracle_gap_bound"] = record.oracle_gap_bound;
    }
    j["wall_ms"] = record.wall_ms;
    if (!record.notes.empty()) j["notes"] = record.notes;
    if (!record.rounds.empty()) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : record.rounds)
            rows.push_back({{"t", r.round.t},
                            {"price", r.round.price_posted},
                            {"sold", r.round.sold},
                            {"reward", r.round.reward},
                            {"benchmark", r.benchmark},
                            {"cum_regret", r.cum_regret}});
        j["rounds"] = std::move(rows);
    }
    return j.dump(2);
}

std::string sweep_to_json(const SweepTable& table, const SlopeFit* fit) {
    nlohmann::json j;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : table.rows)
        rows.push_back({{"k", r.k},
                        {"T", r.T},
                        {"rep", r.rep},
                        {"final_regret", r.final_regret},
                        {"wall_ms", r.wall_ms}});
    j["rows"] = std::move(rows);
    j["ks"] = table.ks;
    j["Ts"] = table.Ts;
    j["mean_regret"] = table.mean_regret;
    j["stderr_regret"] = table.stderr_regret;
    if (fit != nullptr)
        j["fit"] = {{"slope", fit->slope},
                    {"intercept", fit->intercept},
                    {"r2", fit->r2},
                    {"points_used", fit->points_used},
                    {"points_dropped", fit->points_dropped}};
    return j.dump(2);
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::map<std::string, std::string> out;
    std::string line;
    auto trim = [](std::string s) {
        const auto a = s.find_first_not_of(" \t");
        const auto z = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, z - a + 1);
    };
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config lines must be key = value, got: " + line);
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

} // namespace pricing
