#pragma once

#include <cstdint>

#include "fmzv/bernoulli.hpp"
#include "fmzv/errors.hpp"
#include "fmzv/rational.hpp"

namespace fmzv {

// Open-interval power sum sum_{a<n<b} n^k via the Bernoulli closed form
//
//   (1/(k+1)) * sum_{j=0}^{k+1} C(k+1,j) B_j ((-1)^j b^{k+1-j} - a^{k+1-j}),
//
// where B_j are Seki–Bernoulli numbers (B_1 = +1/2) and 0^0 = 1 (the a = 0,
// j = k+1 term). The result is always an integer-valued Rational.
inline Rational faulhaber_closed(std::uint64_t k, std::uint64_t a, std::uint64_t b) {
    if (a >= b) throw DomainError("faulhaber_closed: requires a < b");
    const auto B = bernoulli_numbers(static_cast<unsigned>(k) + 1);
    const Rational ra(a), rb(b);
    Rational acc(0);
    for (std::uint64_t j = 0; j <= k + 1; ++j) {
        const Rational bpow = pow_rat(rb, static_cast<std::int64_t>(k + 1 - j));
        const Rational apow = pow_rat(ra, static_cast<std::int64_t>(k + 1 - j));
        const Rational signed_bpow = (j % 2 == 0) ? bpow : Rational(-bpow);
        acc += Rational(binomial(k + 1, j)) * B[j] * (signed_bpow - apow);
    }
    return acc / Rational(k + 1);
}

} // namespace fmzv
