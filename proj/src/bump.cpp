#include "pricing/bump.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pricing/rng.hpp"

namespace pricing {

double bump(double v) {
    if (v <= 0.0 || v >= 1.0) return 0.0;
    if (v >= 1.0 / 3.0 && v <= 2.0 / 3.0) return 1.0;
    const double x = (v < 1.0 / 3.0) ? 3.0 * v - 1.0 : 3.0 * v - 2.0;
    return std::exp(2.0 - 2.0 / (1.0 - x * x));
}

double rescaled_bump(double v, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("rescaled bump needs a < b");
    return bump((v - a) / (b - a));
}

namespace {

long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

} // namespace

double level_width(int k) {
    if (k < 0) throw std::invalid_argument("level must be >= 0");
    if (k == 0) return 1.0;
    return 1.0 / std::pow(3.0, static_cast<double>(factorial(k)));
}

int level_choice_trits(int k) {
    if (k < 1) throw std::invalid_argument("level must be >= 1");
    if (k <= 2) return 0; // Q_1 = Q_2 = 1
    return static_cast<int>(factorial(k) - factorial(k - 1) - 1);
}

namespace {

constexpr int kMaxDepth = 5; // w_6 = 3^(-720) underflows double precision

BumpInstance rebuild_chain(int depth, double c_f, std::uint64_t seed,
                           std::vector<std::string> trits) {
    if (depth < 1 || depth > kMaxDepth)
        throw std::invalid_argument("depth must be in [1, 5]");
    if (!(c_f > 0.0 && c_f < 1.0 / 6.0))
        throw std::invalid_argument("c_f must be in (0, 1/6)");
    BumpInstance inst;
    inst.depth = depth;
    inst.c_f = c_f;
    inst.b = (6.0 * c_f + 1.0) / 2.0;
    inst.seed = seed;
    inst.level_trits = std::move(trits);
    inst.a.assign(static_cast<std::size_t>(depth) + 1, 0.0);
    for (int k = 1; k <= depth; ++k) {
        const int m = level_choice_trits(k);
        double slot = 0.0;
        if (m > 0) {
            const std::string& digits = inst.level_trits[static_cast<std::size_t>(k - 3)];
            if (static_cast<int>(digits.size()) != m)
                throw std::invalid_argument("level " + std::to_string(k) + " needs " +
                                            std::to_string(m) + " base-3 digits");
            for (char c : digits) {
                if (c < '0' || c > '2')
                    throw std::invalid_argument("slot indices are base-3 digit strings");
                slot = slot * 3.0 + static_cast<double>(c - '0');
            }
        }
        inst.a[static_cast<std::size_t>(k)] = inst.a[static_cast<std::size_t>(k - 1)] +
                                              level_width(k - 1) / 3.0 +
                                              slot * level_width(k);
    }
    return inst;
}

} // namespace

BumpInstance sample_interval_chain(int depth, std::uint64_t seed, double c_f) {
    if (depth < 1 || depth > kMaxDepth)
        throw std::invalid_argument("depth must be in [1, 5]");
    Rng rng(seed);
    std::vector<std::string> trits;
    for (int k = 3; k <= depth; ++k) {
        std::string digits(static_cast<std::size_t>(level_choice_trits(k)), '0');
        for (char& c : digits) c = static_cast<char>('0' + rng.uniform_int(3));
        trits.push_back(std::move(digits));
    }
    return rebuild_chain(depth, c_f, seed, std::move(trits));
}

double f_eval(const BumpInstance& inst, double v) {
    double sum = 0.0;
    for (int k = 0; k <= inst.depth; ++k) {
        const double w = level_width(k);
        const double a = inst.a[static_cast<std::size_t>(k)];
        sum += w * rescaled_bump(v, a, a + w);
    }
    return inst.c_f * sum;
}

double gain_eval(const BumpInstance& inst, double v) {
    const double f = f_eval(inst, v);
    return f / (f + 1.0);
}

double demand_curve_D(const BumpInstance& inst, double v) {
    if (v <= inst.b) return v;
    return inst.b + (1.0 - inst.b) * gain_eval(inst, (v - inst.b) / (1.0 - inst.b));
}

double demand_d(const BumpInstance& inst, double v) {
    if (v < 0.0) throw std::invalid_argument("price must be nonnegative");
    if (v <= inst.b) return 1.0;
    if (v >= 1.0) return 0.0;
    return demand_curve_D(inst, v) / v;
}

std::pair<double, double> optimal_revenue_and_price(const BumpInstance& inst) {
    double widths = 0.0;
    for (int k = 0; k <= inst.depth; ++k) widths += level_width(k);
    const double f_peak = inst.c_f * widths;
    const double value = inst.b + (1.0 - inst.b) * f_peak / (f_peak + 1.0);
    const double mu = inst.a[static_cast<std::size_t>(inst.depth)] +
                      0.5 * level_width(inst.depth);
    return {value, inst.b + (1.0 - inst.b) * mu};
}

std::string serialize(const BumpInstance& inst) {
    std::ostringstream out;
    char buf[64];
    out << "depth = " << inst.depth << "\n";
    std::snprintf(buf, sizeof(buf), "%.17g", inst.c_f);
    out << "c_f = " << buf << "\n";
    std::snprintf(buf, sizeof(buf), "%.17g", inst.b);
    out << "b = " << buf << "\n";
    out << "seed = " << inst.seed << "\n";
    for (int k = 3; k <= inst.depth; ++k)
        out << "level" << k << " = " << inst.level_trits[static_cast<std::size_t>(k - 3)]
            << "\n";
    return out.str();
}

BumpInstance parse_bump_instance(const std::string& text) {
    int depth = -1;
    double c_f = 0.0, b = -1.0;
    std::uint64_t seed = 0;
    std::vector<std::string> trits;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t");
            const auto z = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, z - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "depth")
            depth = std::stoi(val);
        else if (key == "c_f")
            c_f = std::stod(val);
        else if (key == "b")
            b = std::stod(val);
        else if (key == "seed")
            seed = std::stoull(val);
        else if (key.rfind("level", 0) == 0) {
            const int k = std::stoi(key.substr(5));
            if (static_cast<int>(trits.size()) != k - 3)
                throw std::invalid_argument("level records must appear in order 3..K");
            trits.push_back(val);
        }
    }
    BumpInstance inst = rebuild_chain(depth, c_f, seed, std::move(trits));
    if (b >= 0.0 && std::abs(b - inst.b) > 1e-12)
        throw std::invalid_argument("stored b disagrees with (6 c_f + 1) / 2");
    return inst;
}

} // namespace pricing
