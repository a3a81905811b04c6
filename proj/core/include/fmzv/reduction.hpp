#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fmzv/combination.hpp"
#include "fmzv/index.hpp"
#include "fmzv/mod_residue.hpp"
#include "fmzv/poly2.hpp"
#include "fmzv/trunc_zeta.hpp"

namespace fmzv {

// Which of the three depth-reduction formulas a step applied. `single` marks
// the depth-1 base case (the whole index collapses to the empty index).
enum class ReduceCase { head, middle, tail, single };

std::string to_string(ReduceCase c);

// Which non-positive entry reduce_full eliminates first in each index.
// `leftmost` is the canonical strategy (deterministic regression output);
// `rightmost` exists so tests can confirm the results agree under evaluation.
enum class EliminationOrder { leftmost, rightmost };

struct ReductionStep {
    Index index;          // the index that was rewritten
    std::size_t position; // 1-based eliminated position
    ReduceCase tag;
};

// Full log of a reduction: the eliminations performed (grouped by round, so
// depth is non-increasing along `steps` and drops by one between rounds) and
// the final combination, whose keys are all positive indices.
struct ReductionTrace {
    std::vector<ReductionStep> steps;
    Combination final;
};

// One application of the depth-reduction formula at position i (1-based):
// rewrites an index of depth r >= 2 whose i-th entry is -k (k >= 0) as a
// combination of depth r-1 indices with coefficients in Q[x+,x-]:
//
//   i = 1:     sum_j c_j [ (-1)^j (k_2-k-1+j, rest)  -  x+^{k+1-j} (k_2, rest) ]
//   1 < i < r: sum_j c_j [ (-1)^j (right neighbor += j-k-1) - (left neighbor += j-k-1) ]
//   i = r:     sum_j c_j [ (-1)^j x-^{k+1-j} (prefix)  -  (prefix, last += j-k-1) ]
//
// where c_j = C(k+1,j) B_j / (k+1) over j = 0..k+1 with Seki–Bernoulli B_j.
Combination reduce_entry(const Index& k, std::size_t i);

// Depth-1 base case: the coefficient of the empty index for a single entry
// -k <= 0, namely sum_j c_j ((-1)^j x-^{k+1-j} - x+^{k+1-j}). Equals
// B_{k+1}(x-)/(k+1) + (-1)^k B_{k+1}(-x+)/(k+1) in Bernoulli-polynomial form.
Poly2 reduce_depth1(std::int64_t entry);

// Eliminate non-positive entries until only positive indices remain. Runs as
// a worklist over combination terms in depth-descending rounds, so identical
// sub-indices merge before being rewritten again. Positive indices pass
// through unchanged with coefficient 1.
ReductionTrace reduce_full(const Index& k, EliminationOrder strategy = EliminationOrder::leftmost);

// Evaluate a combination in Z/p^nZ with x+ = a, x- = b and every index value
// taken as the (a,b)-truncated sum mod p^n. DenominatorCollision propagates
// when p divides an evaluated coefficient's denominator.
ModResidue evaluate_combination(const Combination& c, std::uint64_t p, unsigned n, std::uint64_t a,
                                std::uint64_t b);

// Same with the default range (0, p).
ModResidue evaluate_combination(const Combination& c, std::uint64_t p, unsigned n);

// Exact rational evaluation: sum_l coeff_l(a, b) * zeta_trunc_exact(l, (a,b)).
// An optional cache memoizes the per-index sums across calls.
Rational evaluate_combination_exact(const Combination& c, std::uint64_t a, std::uint64_t b,
                                    ZetaExactCache* cache = nullptr);

} // namespace fmzv
