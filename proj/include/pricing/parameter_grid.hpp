#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pricing/errors.hpp"
#include "pricing/grid.hpp"

namespace pricing {

// The delta-grid of nonnegative parameter vectors inside the unit L2 ball:
// components n_i * delta with integer n_i in {0, ..., floor(1/delta)},
// ||theta||_2 <= 1. Enumeration order is lexicographic on (n_1, ..., n_d).
struct ParameterGrid {
    double delta = 1.0;
    int dim = 1;
    std::vector<double> flat; // size() * dim, row-major

    std::size_t size() const {
        return dim > 0 ? flat.size() / static_cast<std::size_t>(dim) : 0;
    }
    std::span<const double> vec(std::size_t i) const {
        return {flat.data() + i * static_cast<std::size_t>(dim),
                static_cast<std::size_t>(dim)};
    }
};

ParameterGrid enumerate_parameter_grid(double delta, int dim,
                                       std::uint64_t cap = kDefaultEnumerationCap);

} // namespace pricing
