// Experiment harness CLI: run the two pricing algorithms against their
// environments, sweep horizons for the regret slope, enumerate the discrete
// policy ingredients and run the property suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pricing/discrete_cdf.hpp"
#include "pricing/errors.hpp"
#include "pricing/harness.hpp"
#include "pricing/parameter_grid.hpp"
#include "pricing/policies.hpp"
#include "pricing/verify.hpp"

namespace {

using namespace pricing;

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

void emit_record(const RegretRecord& rec, const std::string& out_path,
                 const std::string& format) {
    if (out_path.empty()) return;
    if (format == "json") {
        write_text(out_path, record_to_json(rec));
    } else {
        std::ostringstream os;
        write_rounds_csv(os, rec);
        write_text(out_path, os.str());
    }
    std::cout << "wrote " << out_path << "\n";
}

void print_summary(const RegretRecord& rec) {
    std::cout << "T = " << rec.config.T << ", policies = " << rec.num_policies
              << ", actions = " << rec.num_actions
              << ", delta = " << format_sig12(rec.params.spec.delta)
              << ", gamma = " << format_sig12(rec.params.spec.gamma) << "\n";
    std::cout << "total reward   = " << format_sig12(rec.total_reward) << "\n";
    std::cout << "final regret   = " << format_sig12(rec.final_regret) << "\n";
    if (rec.final_regret_exante)
        std::cout << "ex-ante regret = " << format_sig12(*rec.final_regret_exante) << "\n";
    if (rec.final_regret_analytic)
        std::cout << "analytic regret= " << format_sig12(*rec.final_regret_analytic) << "\n";
    if (rec.hindsight_total) {
        std::cout << "hindsight best = " << format_sig12(*rec.hindsight_total)
                  << " (oracle gap bound " << format_sig12(rec.oracle_gap_bound) << ", beta =";
        for (double b : rec.hindsight_beta) std::cout << ' ' << format_sig12(b);
        std::cout << ")\n";
    }
    std::cout << "wall ms        = " << format_sig12(rec.wall_ms) << "\n";
}

// Shared option block; keys in a --config file match these long names.
struct CommonOpts {
    RunConfig cfg;
    std::string theta_csv, beta_csv, cdf_levels_csv, noise = "uniform";

    void attach(CLI::App* sub, bool lv_defaults) {
        if (lv_defaults) {
            cfg.d = 1;
            cfg.T = 2000;
        }
        sub->add_option("--T", cfg.T, "horizon");
        sub->add_option("--d", cfg.d, "feature dimension");
        sub->add_option("--B", cfg.B, "feature norm bound");
        sub->add_option("--seed", cfg.seed, "base seed");
        sub->add_option("--reps", cfg.reps, "repetitions (sweep)");
        sub->add_option("--delta", cfg.delta, "parameter grid step (0 = auto schedule)");
        sub->add_option("--gamma", cfg.gamma, "price grid step (0 = auto schedule)");
        sub->add_option("--sigma", cfg.sigma, "gaussian noise std dev");
        sub->add_option("--depth", cfg.bump_depth, "bump instance depth K");
        sub->add_option("--cf", cfg.bump_cf, "bump instance constant C_f");
        sub->add_option("--out", cfg.out_path, "output file");
        sub->add_option("--format", cfg.format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--contexts", cfg.contexts, "sphere|onehot|ones")
            ->check(CLI::IsMember({"sphere", "onehot", "ones"}));
        sub->add_option("--noise", noise, "uniform|truncgauss|discrete|none")
            ->check(CLI::IsMember({"uniform", "truncgauss", "discrete", "none"}));
        sub->add_option("--theta-star", theta_csv, "comma list");
        sub->add_option("--beta-star", beta_csv, "comma list");
        sub->add_option("--cdf-levels", cdf_levels_csv,
                        "comma list of integer levels for discrete noise");
        sub->add_option("--oracle-refine", cfg.oracle_refine,
                        "hindsight grid refinement factor");
        sub->add_option("--max-policies", cfg.max_policies, "LV catalog refusal threshold");
        sub->add_flag("--no-hindsight", "skip the hindsight oracle");
        sub->add_flag("--no-rounds", "do not record per-round rows");
    }

    RunConfig resolve(CLI::App* sub, Algo algo, EnvKind env) {
        cfg.algo = algo; // the noise grid below depends on the resolved schedule
        cfg.env = env;
        if (!theta_csv.empty()) cfg.theta_star = parse_double_list(theta_csv);
        if (!beta_csv.empty()) cfg.beta_star = parse_double_list(beta_csv);
        if (sub->count("--no-hindsight") > 0) cfg.hindsight_oracle = false;
        if (sub->count("--no-rounds") > 0) cfg.record_rounds = false;
        if (noise == "uniform") cfg.noise.kind = NoiseSpec::Kind::Uniform;
        if (noise == "none") cfg.noise.kind = NoiseSpec::Kind::None;
        if (noise == "truncgauss") {
            cfg.noise.kind = NoiseSpec::Kind::TruncatedGaussian;
            cfg.noise.sigma = cfg.sigma;
        }
        if (noise == "discrete") {
            cfg.noise.kind = NoiseSpec::Kind::Discrete;
            if (cdf_levels_csv.empty())
                throw CLI::ValidationError("--noise discrete needs --cdf-levels");
            const auto params = resolve_params(cfg);
            cfg.noise.cdf = DiscreteCdf(params.spec.gamma, parse_int_list(cdf_levels_csv));
        }
        return cfg;
    }
};

// Flat `key = value` config support: inject tokens ahead of the explicit CLI
// arguments so command-line flags override file values (TakeLast policy).
std::vector<std::string> expand_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config_path = args[i + 1];
            args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
            args.erase(args.begin() + static_cast<long>(i));
            break;
        }
    }
    if (config_path.empty() || args.empty()) return args;

    std::vector<std::string> injected;
    injected.push_back(args[0]); // subcommand name stays first
    for (const auto& [key, value] : parse_config_file(config_path)) {
        if (value == "true") {
            injected.push_back("--" + key);
        } else if (value == "false") {
            // flag left unset
        } else {
            injected.push_back("--" + key);
            injected.push_back(value);
        }
    }
    injected.insert(injected.end(), args.begin() + 1, args.end());
    return injected;
}

void print_sweep(const SweepTable& table, const SlopeFit* fit, int d) {
    std::cout << "k,T,mean_regret,stderr\n";
    for (std::size_t i = 0; i < table.ks.size(); ++i)
        std::cout << table.ks[i] << ',' << table.Ts[i] << ','
                  << format_sig12(table.mean_regret[i]) << ','
                  << format_sig12(table.stderr_regret[i]) << "\n";
    if (fit != nullptr) {
        std::cout << "log-log slope = " << format_sig12(fit->slope)
                  << ", intercept = " << format_sig12(fit->intercept)
                  << ", r2 = " << format_sig12(fit->r2) << "\n";
        if (fit->points_dropped > 0)
            std::cerr << "warning: " << fit->points_dropped
                      << " nonpositive mean-regret points excluded from the fit\n";
    } else {
        std::cout << "log-log slope skipped (needs >= 3 points with positive regret)\n";
    }
    double lo = 1e300, hi = -1e300;
    for (std::size_t i = 0; i < table.ks.size(); ++i) {
        const double t = static_cast<double>(table.Ts[i]);
        const double norm = std::cbrt(static_cast<double>(d)) * std::pow(t, 2.0 / 3.0) *
                            std::log(static_cast<double>(d) * t);
        const double ratio = table.mean_regret[i] / norm;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    std::cout << "envelope regret/(d^{1/3} T^{2/3} ln(dT)) in [" << format_sig12(lo) << ", "
              << format_sig12(hi) << "]\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Agnostic feature-based dynamic pricing experiments"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    auto* run_lp = app.add_subcommand("run-lp", "Linear-EXP4 on a pricing environment");
    CommonOpts lp_opts;
    lp_opts.attach(run_lp, false);
    std::string lp_env = "gaussian";
    run_lp->add_option("--env", lp_env, "gaussian|linear")
        ->check(CLI::IsMember({"gaussian", "linear"}));

    auto* run_lv = app.add_subcommand("run-lv", "D2-EXP4 on the linear-valuation environment");
    CommonOpts lv_opts;
    lv_opts.attach(run_lv, true);

    auto* run_bump = app.add_subcommand("run-bump", "EXP-4 pricing on a hard bump instance");
    CommonOpts bump_opts;
    bump_opts.attach(run_bump, false);

    auto* sweep = app.add_subcommand("sweep", "regret-vs-horizon sweep with log-log slope fit");
    CommonOpts sweep_opts;
    sweep_opts.attach(sweep, false);
    int k_lo = 27, k_hi = 48, threads = 0;
    sweep->add_option("--k-lo", k_lo, "first k in T = floor(2^(k/3))");
    sweep->add_option("--k-hi", k_hi, "last k");
    sweep->add_option("--threads", threads, "worker threads (0 = hardware)");

    auto* enumerate = app.add_subcommand("enumerate", "list the discretized sets");
    std::string what = "params";
    double e_delta = 0.5, e_gamma = 0.5;
    int e_d = 2, e_B = 1;
    std::uint64_t e_cap = kDefaultEnumerationCap;
    std::string e_out;
    enumerate->add_option("--what", what, "params|cdfs|catalog-lp|catalog-lv")
        ->check(CLI::IsMember({"params", "cdfs", "catalog-lp", "catalog-lv"}));
    enumerate->add_option("--delta", e_delta, "parameter grid step");
    enumerate->add_option("--gamma", e_gamma, "price/CDF grid step");
    enumerate->add_option("--d", e_d, "dimension");
    enumerate->add_option("--B", e_B, "feature norm bound");
    enumerate->add_option("--cap", e_cap, "enumeration cap");
    enumerate->add_option("--out", e_out, "write full listing to this file");

    auto* verify = app.add_subcommand("verify", "run the property suites");

    try {
        auto args = expand_config(argc, argv);
        std::vector<const char*> cargs;
        cargs.push_back("pricing");
        for (const auto& a : args) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());

        if (run_lp->parsed()) {
            RunConfig cfg = lp_opts.resolve(
                run_lp, Algo::LinearExp4,
                lp_env == "gaussian" ? EnvKind::GaussianGreedy : EnvKind::LinearValuation);
            const RegretRecord rec = run_linear_exp4(cfg);
            print_summary(rec);
            emit_record(rec, cfg.out_path, cfg.format);
        } else if (run_lv->parsed()) {
            RunConfig cfg = lv_opts.resolve(run_lv, Algo::D2Exp4, EnvKind::LinearValuation);
            const RegretRecord rec = run_d2_exp4(cfg);
            print_summary(rec);
            emit_record(rec, cfg.out_path, cfg.format);
        } else if (run_bump->parsed()) {
            RunConfig cfg = bump_opts.resolve(run_bump, Algo::LinearExp4, EnvKind::Bump);
            const RegretRecord rec = run_bump_exp4(cfg);
            print_summary(rec);
            std::cout << rec.notes << "\n";
            emit_record(rec, cfg.out_path, cfg.format);
        } else if (sweep->parsed()) {
            RunConfig cfg = sweep_opts.resolve(sweep, Algo::LinearExp4, EnvKind::GaussianGreedy);
            const SweepTable table = sweep_T(cfg, k_lo, k_hi, cfg.reps, threads);
            std::optional<SlopeFit> fit;
            int positive = 0;
            for (double m : table.mean_regret)
                if (m > 0.0) ++positive;
            if (positive >= 3) fit = fit_loglog_slope(table.Ts, table.mean_regret);
            print_sweep(table, fit ? &*fit : nullptr, cfg.d);
            if (!cfg.out_path.empty()) {
                if (cfg.format == "json") {
                    write_text(cfg.out_path, sweep_to_json(table, fit ? &*fit : nullptr));
                } else {
                    std::ostringstream os;
                    write_sweep_csv(os, table);
                    write_text(cfg.out_path, os.str());
                }
                std::cout << "wrote " << cfg.out_path << "\n";
            }
        } else if (enumerate->parsed()) {
            std::ostringstream listing;
            if (what == "params") {
                const auto grid = enumerate_parameter_grid(e_delta, e_d, e_cap);
                std::cout << "parameter grid size = " << grid.size() << "\n";
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    const auto v = grid.vec(i);
                    for (std::size_t j = 0; j < v.size(); ++j)
                        listing << (j ? "," : "") << format_sig12(v[j]);
                    listing << "\n";
                }
            } else if (what == "cdfs") {
                const auto family = enumerate_cdf_set(e_gamma, e_cap);
                std::cout << "CDF family size = " << family.size() << "\n";
                for (const auto& f : family) {
                    for (std::size_t j = 0; j < f.num_points(); ++j)
                        listing << (j ? "," : "") << f.level(j);
                    listing << "\n";
                }
            } else {
                const PolicyKind kind =
                    what == "catalog-lp" ? PolicyKind::LP : PolicyKind::LV;
                GridSpec spec{e_delta, e_gamma, e_B, e_d, 1};
                const auto cat = PolicyCatalog::build(kind, spec, e_cap);
                std::cout << "catalog size = " << cat.size()
                          << ", actions = " << cat.num_actions() << "\n";
            }
            if (!e_out.empty()) {
                write_text(e_out, listing.str());
                std::cout << "wrote " << e_out << "\n";
            }
        } else if (verify->parsed()) {
            int failures = 0;
            for (const auto& check : run_property_checks()) {
                std::cout << (check.pass ? "[PASS] " : "[FAIL] ") << check.name << " — "
                          << check.detail << "\n";
                if (!check.pass) ++failures;
            }
            return failures == 0 ? 0 : 1;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const pricing::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
