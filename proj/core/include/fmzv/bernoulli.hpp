#pragma once

#include <vector>

#include "fmzv/polyq.hpp"
#include "fmzv/rational.hpp"

namespace fmzv {

// Seki–Bernoulli numbers B_0..B_N, i.e. the coefficients of z*e^z/(e^z-1):
// the convention with B_1 = +1/2 (equivalently B_n = B_n(1) for the standard
// Bernoulli polynomials). Memoized; exact recurrence, no floating point.
std::vector<Rational> bernoulli_numbers(unsigned N);

// Single Seki–Bernoulli number B_j.
Rational bernoulli_number(unsigned j);

// n-th Bernoulli polynomial B_n(x), generating function z*e^{xz}/(e^z-1).
// Satisfies B_n(1) = B_n (Seki convention) and B_n(0) = (-1)^n * B_n.
PolyQ bernoulli_polynomial(unsigned n);

} // namespace fmzv
