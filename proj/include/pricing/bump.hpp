#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pricing {

// Smooth plateau bump: 0 outside (0, 1), exactly 1 on [1/3, 2/3], C-infinity
// transitions exp(2 - 2/(1 - x^2)) with x = 3v-1 resp. 3v-2. The transition
// exponent is chosen so the maximal slope (~5.74) keeps the function
// 6-Lipschitz.
double bump(double v);

// bump((v - a) / (b - a)); requires a < b
double rescaled_bump(double v, double a, double b);

// Interval half-width sequence: w_0 = 1, w_k = 3^(-k!) for k >= 1.
double level_width(int k);

// Number of admissible placements at level k, always a power of three:
// Q_k = w_{k-1} / (3 w_k) = 3^(k! - (k-1)! - 1).
int level_choice_trits(int k);

// A sampled nested-interval chain [a_1,b_1] > ... > [a_K,b_K] with
// b_k = a_k + w_k; each level-k interval sits inside the middle third of its
// parent, at one of the Q_k slots chosen uniformly. Levels 1 and 2 are forced
// ([1/3, 2/3] and [4/9, 5/9]). Level-k slot indices are kept as base-3 digit
// strings because Q_5 = 3^95 exceeds any machine integer.
struct BumpInstance {
    int depth = 1;       // K
    double c_f = 1.0 / 60.0;
    double b = 11.0 / 20.0; // (6 c_f + 1) / 2
    std::uint64_t seed = 0;
    std::vector<double> a;                 // a[0..K], a[0] = 0
    std::vector<std::string> level_trits;  // slot index per level 3..K, msd first
};

BumpInstance sample_interval_chain(int depth, std::uint64_t seed, double c_f = 1.0 / 60.0);

// Reward-shape tower truncated at depth K (the k = 0 term uses [0, 1]):
// f(v) = c_f * sum_{k=0..K} w_k * bump_{[a_k, b_k]}(v)
double f_eval(const BumpInstance& inst, double v);

// G(v) = 1 - 1/(f(v) + 1) = f(v)/(f(v) + 1)
double gain_eval(const BumpInstance& inst, double v);

// Revenue curve D: v on [0, b], b + (1-b) G((v-b)/(1-b)) on (b, 1]
double demand_curve_D(const BumpInstance& inst, double v);

// Acceptance probability d(v) = D(v)/v extended by 1 below b and 0 above 1;
// negative prices are rejected with invalid_argument.
double demand_d(const BumpInstance& inst, double v);

// max_v v * d(v) = b + (1-b) * f* / (f* + 1), attained on the innermost
// plateau; the second member is the price at the plateau center.
std::pair<double, double> optimal_revenue_and_price(const BumpInstance& inst);

// Flat text record: depth, c_f, b, seed and the level slot indices; enough to
// rebuild the chain bit-exactly.
std::string serialize(const BumpInstance& inst);
BumpInstance parse_bump_instance(const std::string& text);

} // namespace pricing
