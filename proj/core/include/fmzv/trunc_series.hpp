#pragma once

#include <map>
#include <vector>

#include "fmzv/poly2.hpp"
#include "fmzv/rational.hpp"

namespace fmzv {

// Multivariate power series in z_1..z_nvars over Q[y+,y-], truncated by total
// degree: stored coefficients are exact for every exponent vector of total
// degree < trunc, and everything at or above trunc is dropped.
//
// The `prefactor` vector tracks a monomial z^prefactor multiplying the stored
// part; negative entries represent Laurent poles that are expected to cancel.
// normalize() folds the prefactor into the stored exponents and raises
// PoleResidue if any nonzero coefficient would end up at a negative effective
// exponent — regularity is guaranteed for every series this library builds, so
// a surviving pole is an implementation bug by definition.
struct TruncSeries {
    unsigned nvars = 0;
    unsigned trunc = 0;
    std::vector<int> prefactor;                   // size nvars
    std::map<std::vector<unsigned>, Poly2> coeffs; // stored exponent -> coefficient

    static TruncSeries zero(unsigned nvars, unsigned trunc);
    static TruncSeries constant(unsigned nvars, unsigned trunc, const Poly2& c);

    bool is_regular() const; // all prefactor entries zero
    unsigned total(const std::vector<unsigned>& e) const;

    const Poly2& coeff(const std::vector<unsigned>& e) const; // stored exponent
    void add_term(const std::vector<unsigned>& e, const Poly2& c);

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries scaled(const Poly2& c) const;

    // Fold the prefactor into the stored exponents (PoleResidue if a nonzero
    // coefficient sits at a negative effective degree). Shifting down by a
    // total of s costs s degrees of accuracy: trunc becomes trunc + sum(prefactor).
    TruncSeries normalized() const;

    // Drop all terms of total degree >= n and lower trunc accordingly.
    TruncSeries truncated(unsigned n) const;

    // Reinterpret in a larger variable set (exponents padded with zeros).
    TruncSeries extended(unsigned new_nvars) const;

    // Substitute z_last -> z_last + z_new where z_new is a fresh variable
    // appended at the end; performed by binomial re-expansion, which is exact
    // within the truncation (total degree is preserved). Requires a regular
    // series.
    TruncSeries subst_last_var_sum() const;
};

// Coefficients of u(z) = (e^z - 1)/z, a unit power series, up to degree < n.
std::vector<Rational> unit_u_series(unsigned n);

// Coefficients of u(z)^{-1} = z/(e^z - 1) up to degree < n (series inversion).
std::vector<Rational> unit_u_inverse(unsigned n);

// Exact division of S by the linear form L = z_c + ... + z_d (0-based,
// inclusive): returns Q with Q * L = S, truncated one degree lower. Raises
// PoleResidue if S is not divisible (checked by multiplying back).
TruncSeries divide_exact_linear(const TruncSeries& S, unsigned c, unsigned d);

} // namespace fmzv
