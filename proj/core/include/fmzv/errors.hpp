#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fmzv {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A rational with denominator divisible by p was pushed into Z/p^n, or a
// modular inverse of a non-unit was requested. Sweeps skip such primes.
struct DenominatorCollision : Error {
    using Error::Error;
};

// Malformed text input; `position` is the byte offset of the offending spot.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// A brute-force enumeration would exceed its configured work bound.
struct SizeGuard : Error {
    using Error::Error;
};

// A Laurent-series pole failed to cancel where regularity is guaranteed;
// indicates an implementation bug, never a data problem.
struct PoleResidue : Error {
    using Error::Error;
};

// A series was not truncated deeply enough for the requested extraction.
struct TruncationTooSmall : Error {
    using Error::Error;
};

// Parameters outside a function's mathematical domain (convergence region,
// branch cut, invalid range bounds, ...).
struct DomainError : Error {
    using Error::Error;
};

// Two lattice points were not in the required total-order relation.
struct OrderViolation : Error {
    using Error::Error;
};

} // namespace fmzv
