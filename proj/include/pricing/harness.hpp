#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pricing/environments.hpp"
#include "pricing/grid.hpp"
#include "pricing/policies.hpp"

namespace pricing {

enum class Algo { LinearExp4, D2Exp4 };
enum class EnvKind { GaussianGreedy, LinearValuation, Bump };

struct RunConfig {
    Algo algo = Algo::LinearExp4;
    EnvKind env = EnvKind::GaussianGreedy;
    int d = 2;
    int B = 1;
    long long T = 1000;
    double delta = 0.0; // 0 = auto schedule from T and d
    double gamma = 0.0; // 0 = auto; always snapped down to 1/n
    double sigma = 0.25;
    std::uint64_t seed = 1;
    int reps = 20;

    std::vector<double> beta_star;  // empty = default pattern
    std::vector<double> theta_star; // empty = default pattern
    NoiseSpec noise;
    std::string contexts = "sphere"; // sphere | onehot | ones

    int bump_depth = 3;
    double bump_cf = 1.0 / 60.0;

    double oracle_refine = 4.0; // hindsight grid step = delta / oracle_refine
    bool hindsight_oracle = true;
    bool record_rounds = true;
    std::uint64_t max_policies = 1'000'000;
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;

    std::string out_path;
    std::string format = "csv";
};

// Resolved discretization plus what produced it; echoed into output metadata.
struct ResolvedParams {
    GridSpec spec;
    double delta_raw = 0.0;
    double gamma_raw = 0.0;
    bool auto_schedule = false;
};

ResolvedParams resolve_params(const RunConfig& cfg);
double snap_unit_fraction(double gamma); // largest 1/n <= gamma

std::vector<double> default_beta_star(int d);
std::vector<double> default_theta_star(int d);

struct RoundRow {
    Round round;
    double benchmark = 0.0;
    double cum_regret = 0.0;
};

struct RegretRecord {
    RunConfig config;
    ResolvedParams params;
    std::vector<RoundRow> rounds; // empty unless record_rounds

    double total_reward = 0.0;
    double final_regret = 0.0; // the env's primary regret notion
    // secondary aggregates, populated where they apply
    std::optional<double> final_regret_exante;   // Gaussian-greedy runs
    std::optional<double> final_regret_analytic; // expected-revenue benchmark
    std::optional<double> hindsight_total;       // best fixed beta
    std::vector<double> hindsight_beta;
    double oracle_gap_bound = 0.0;
    std::size_t num_policies = 0;
    std::size_t num_actions = 0;
    double wall_ms = 0.0;
    std::string notes;
};

RegretRecord run_linear_exp4(const RunConfig& cfg);
RegretRecord run_d2_exp4(const RunConfig& cfg);
RegretRecord run_bump_exp4(const RunConfig& cfg);

// Ex-ante per-round regret: per-round optimum minus the analytic
// expected revenue of each posted price.
std::vector<double> compute_lv_regret(const std::vector<double>& prices,
                                      const std::vector<double>& noiseless_valuations,
                                      const NoiseSpec& noise, double price_cap);

// The empirical ex-ante estimator: benchmark and agent scored on the same
// valuation draws. Per-round values may be negative.
double compute_empirical_exante_regret(const std::vector<double>& agent_rewards,
                                       const std::vector<double>& benchmark_rewards);

struct SweepRow {
    int k = 0;
    long long T = 0;
    int rep = 0;
    double final_regret = 0.0;
    double wall_ms = 0.0;
};

struct SweepTable {
    std::vector<SweepRow> rows; // ordered by (k, rep)
    std::vector<int> ks;
    std::vector<long long> Ts;
    std::vector<double> mean_regret;
    std::vector<double> stderr_regret;
};

long long sweep_horizon(int k); // floor(2^(k/3))

// Repetitions run with seeds mix_seed(seed, k, rep), so thread count never
// changes the table.
SweepTable sweep_T(const RunConfig& base, int k_lo, int k_hi, int reps, int threads = 0);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    int points_used = 0;
    int points_dropped = 0; // nonpositive means excluded with a warning
};

SlopeFit fit_loglog_slope(const std::vector<long long>& Ts,
                          const std::vector<double>& mean_regret);

void write_rounds_csv(std::ostream& out, const RegretRecord& record);
void write_sweep_csv(std::ostream& out, const SweepTable& table);
std::string record_to_json(const RegretRecord& record);
std::string sweep_to_json(const SweepTable& table, const SlopeFit* fit);
std::string format_sig12(double x);

// Flat "key = value" config text, one key per line; '#' starts a comment.
std::map<std::string, std::string> parse_config_file(const std::string& path);

} // namespace pricing
