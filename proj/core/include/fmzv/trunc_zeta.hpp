#pragma once

#include <cstdint>
#include <map>
#include <tuple>

#include "fmzv/index.hpp"
#include "fmzv/mod_residue.hpp"
#include "fmzv/rational.hpp"

namespace fmzv {

// Summation range (a, b): the sum runs over a < n_1 < ... < n_r < b.
// The default range for the per-prime value is (0, p).
struct TruncationRange {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
};

// Counter for the DP cost assertion: the prefix-state recurrence performs
// exactly (b-a-1)*depth inner updates.
struct DpStats {
    std::uint64_t inner_updates = 0;
};

// Exact truncated multiple harmonic sum
//   sum_{a<n_1<...<n_r<b} prod_i n_i^{-k_i}
// for a general integer index (negative entries are positive powers).
// Empty index -> 1; empty tuple set -> 0 for r >= 1. Computed by the
// prefix-state DP S_j(m+1) = S_j(m) + m^{-k_j} * S_{j-1}(m), O((b-a)*r).
Rational zeta_trunc_exact(const Index& k, TruncationRange range, DpStats* stats = nullptr);

// Same DP carried out in Z/p^nZ without constructing the exact rational.
// Raises DenominatorCollision if a summand base must be inverted but is
// divisible by p (possible only when range.b > p). The caller guarantees
// that p is prime.
ModResidue zeta_trunc_mod(const Index& k, std::uint64_t p, unsigned n, TruncationRange range,
                          DpStats* stats = nullptr);

// Independent oracle: literal enumeration of all tuples a < n_1 < ... < n_r < b.
// Internally the partial products are rescaled by a common denominator so the
// accumulation is pure integer arithmetic, but every tuple is still visited.
// Guarded by (b-a)^depth <= 10^7 (SizeGuard).
Rational zeta_trunc_bruteforce(const Index& k, TruncationRange range);

// Memo for repeated exact evaluations of the same (index, range); used by
// verification harnesses that evaluate many combinations over a shared range
// grid. Not thread-safe; use one cache per worker.
struct ZetaExactCache {
    std::map<std::tuple<Index, std::uint64_t, std::uint64_t>, Rational> values;

    const Rational& get(const Index& k, TruncationRange range) {
        const auto key = std::make_tuple(k, range.a, range.b);
        auto it = values.find(key);
        if (it == values.end()) it = values.emplace(key, zeta_trunc_exact(k, range)).first;
        return it->second;
    }
};

} // namespace fmzv
