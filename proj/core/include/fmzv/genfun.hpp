#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fmzv/rational.hpp"
#include "fmzv/trunc_series.hpp"

namespace fmzv {

// Depth-1 generating series: G_1(z) = e^{y+ z} e^z/(1-e^z) - e^{y- z}/(1-e^z).
// The two simple poles at z = 0 cancel; the result is regular with trunc >= N
// and its z^k coefficient times k! is the polynomial P_1(k; y+, y-).
TruncSeries g1_series(unsigned N);

// One step of the depth recurrence
//   G_r = G_{r-1}(z_1,...,z_{r-1}+z_r) e^{z_r}/(1-e^{z_r})
//       - G_{r-1}(z_1,...,z_{r-1}) e^{y- z_r}/(1-e^{z_r}).
// The pole of 1/(1-e^{z_r}) is carried as a z_r^{-1} prefactor and must
// cancel in the difference; one degree of truncation is spent doing so.
// Requires g_prev regular with trunc >= N + 1 (TruncationTooSmall otherwise).
TruncSeries gr_recurrence(const TruncSeries& g_prev, unsigned N);

// G_r by iterating the recurrence from g1_series; trunc of the result is N.
TruncSeries gr_via_recurrence(unsigned r, unsigned N);

// G_r directly from the summation formula
//   G_r = sum_{i=0}^r (-1)^{r-i} e^{y+(z_1+..+z_i) + y-(z_{i+1}+..+z_r)}
//         prod_{l<=i} e^{w_l}/(1-e^{w_l}) prod_{l>i} 1/(1-e^{v_l}),
// with w_l = z_l+...+z_i and v_l = z_{i+1}+...+z_l. Each summand is singular
// but the sum is regular: the implementation clears the common denominator
// (the product of all r(r+1)/2 contiguous forms z_c+...+z_d), sums the
// regular numerators, and performs exact division by every linear form.
TruncSeries gr_closed_form(unsigned r, unsigned N);

// Table of P_r(k_1..k_r; y+, y-) = (prod k_i!) * [z^k] G_r for all k_i <= kmax.
using PTable = std::map<std::vector<unsigned>, Poly2>;

// Extraction from an existing regular series (throws TruncationTooSmall when
// trunc <= r * kmax, i.e. some requested coefficient is beyond the reliable
// range).
PTable extract_P(const TruncSeries& g, unsigned kmax);

// Convenience: build G_r via the recurrence at a sufficient truncation and
// extract.
PTable p_table(unsigned r, unsigned kmax);

// Literal enumeration of sum_{a<n_1<...<n_r<b} prod n_i^{k_i} (non-negative
// exponents). Guarded by (b-a)^r <= 10^7 (SizeGuard). This is the integer
// power-sum oracle the P_r table is checked against: P_r(k; a, b) equals this
// sum exactly.
BigInt integer_powersum_oracle(const std::vector<std::uint64_t>& k, std::uint64_t a, std::uint64_t b);

// CSV rows "k1,...,kr;polynomial" in ascending lexicographic k order, with a
// header line; polynomials use variables yp/ym in the canonical term order.
std::string p_table_csv(const PTable& table);

} // namespace fmzv
