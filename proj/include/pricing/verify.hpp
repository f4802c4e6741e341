#pragma once

#include <string>
#include <vector>

#include "pricing/piecewise_cdf.hpp"
#include "pricing/rng.hpp"

namespace pricing {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The fast property suites behind the `verify` subcommand: rounding algebra,
// the CDF-family counting and sandwich facts, the policy realizability chain,
// agent exploration floors, the hard-instance shape checks and run
// determinism. Each check runs in at most a few seconds.
std::vector<CheckResult> run_property_checks();

// Random continuous piecewise-linear CDF on [-1, 1] (F(-1) = 0, F(1) = 1);
// optionally places an atom at the left edge.
PiecewiseCdf random_monotone_cdf(Rng& rng, bool allow_atom_at_left = false);

} // namespace pricing
