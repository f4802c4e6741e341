#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pricing {

// Thrown when an enumeration or policy catalog would exceed its configured
// cap. Carries the size the construction would have had.
class capacity_error : public std::runtime_error {
public:
    capacity_error(const std::string& what, std::uint64_t would_be_size)
        : std::runtime_error(what), would_be_size_(would_be_size) {}

    std::uint64_t would_be_size() const { return would_be_size_; }

private:
    std::uint64_t would_be_size_;
};

} // namespace pricing
