#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "fmzv/errors.hpp"

namespace fmzv {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// lowest terms with positive denominator after every operation, which makes
// equality testing trivial.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// Integer power with the convention 0^0 = 1. This is the single power
// routine used by every polynomial/power-sum evaluation in the library, so
// the convention is encoded exactly once.
inline BigInt pow_int(const BigInt& base, std::uint64_t e) {
    BigInt acc(1), b = base;
    while (e != 0) {
        if (e & 1) acc *= b;
        e >>= 1;
        if (e != 0) b *= b;
    }
    return acc;
}

// Signed-exponent rational power; negative exponents invert (base must be
// nonzero in that case). 0^0 = 1.
inline Rational pow_rat(const Rational& base, std::int64_t e) {
    if (e >= 0) {
        return Rational(pow_int(numerator(base), static_cast<std::uint64_t>(e)),
                        pow_int(denominator(base), static_cast<std::uint64_t>(e)));
    }
    if (base == 0) throw DomainError("pow_rat: negative power of zero");
    const auto ae = static_cast<std::uint64_t>(-e);
    return Rational(pow_int(denominator(base), ae), pow_int(numerator(base), ae));
}

// Binomial coefficient by the multiplicative formula (exact at every step).
inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc(1);
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc *= BigInt(n - k + i);
        acc /= BigInt(i);
    }
    return acc;
}

// "num/den" (or plain "num" when den == 1); used by plain-text output.
inline std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace fmzv
