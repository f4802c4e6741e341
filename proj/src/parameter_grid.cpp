#include "pricing/parameter_grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pricing {

ParameterGrid enumerate_parameter_grid(double delta, int dim, std::uint64_t cap) {
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("delta must be in (0, 1]");
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");

    const long long n_max = floor_index(1.0, delta);
    // ||theta||^2 <= 1 as an integer condition on sum n_i^2, with slack so
    // boundary vectors like (1, 0) survive inexact delta.
    const double sq_limit = (1.0 + 1e-9) / (delta * delta);

    ParameterGrid grid;
    grid.delta = delta;
    grid.dim = dim;

    std::vector<int> n(static_cast<std::size_t>(dim), 0);
    auto rec = [&](auto&& self, int pos, double sq_used) -> void {
        if (pos == dim) {
            if (grid.size() >= cap)
                throw capacity_error("parameter grid for (delta = " + std::to_string(delta) +
                                         ", d = " + std::to_string(dim) + ") exceeds cap " +
                                         std::to_string(cap),
                                     cap + 1);
            for (int i = 0; i < dim; ++i)
                grid.flat.push_back(static_cast<double>(n[static_cast<std::size_t>(i)]) * delta);
            return;
        }
        for (long long v = 0; v <= n_max; ++v) {
            const double sq = sq_used + static_cast<double>(v) * static_cast<double>(v);
            if (sq > sq_limit) break;
            n[static_cast<std::size_t>(pos)] = static_cast<int>(v);
            self(self, pos + 1, sq);
        }
    };
    rec(rec, 0, 0.0);
    return grid;
}

} // namespace pricing
