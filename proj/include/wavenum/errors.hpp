#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wavenum {

/// Precondition violated (zero wavelength, empty product list, out-of-range phase...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A materialization or scan would exceed a configured cap or budget.
class CapacityError : public std::length_error {
public:
    CapacityError(const std::string& what, std::uint64_t required)
        : std::length_error(what), required_(required) {}

    std::uint64_t required() const noexcept { return required_; }

private:
    std::uint64_t required_;
};

} // namespace wavenum
