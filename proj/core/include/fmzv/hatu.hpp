#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fmzv/reduction.hpp"

namespace fmzv {

using Complex = std::complex<double>;

// A numeric series value together with a rigorous bound on the truncation
// tail |exact - value|. Budgets come from integral-comparison estimates and
// are computed, never guessed; +inf signals that the bound degenerated.
struct NumericValue {
    Complex value{0.0, 0.0};
    double tail_budget = 0.0;
};

// Argument bundle for the two-parameter function: s-vector plus deformation
// parameters, with the branch constraints t+ not in (-inf,-1] and t- not in
// [1,inf) checked at construction.
struct ComplexPoint {
    std::vector<Complex> s;
    Complex t_plus{0.0, 0.0};
    Complex t_minus{0.0, 0.0};

    ComplexPoint(std::vector<Complex> s_, Complex tp, Complex tm);
};

// One point of the two-sided lattice: n + t+ on the plus side or -n + t- on
// the minus side. The total order places the plus side ascending by n, every
// plus point below every minus point, and the minus side descending by n.
// The endpoints t+ and t- themselves are (plus, 0) and (minus, 0).
enum class Side { plus, minus };

struct LatticePoint {
    Side side = Side::plus;
    std::uint64_t n = 0;
};

bool lattice_less(LatticePoint a, LatticePoint b);
Complex lattice_value(LatticePoint p, Complex t_plus, Complex t_minus);

// Truncated Hurwitz-type series sum_{0<n_1<...<n_r<=N} prod (n_i - t)^{-s_i}
// with principal-branch powers. Preconditions: t not in [1,inf) and every
// tail constraint Re(s_j)+...+Re(s_r) > r+1-j holds with margin >= 1
// (DomainError otherwise). Empty s -> 1 with zero budget.
NumericValue hurwitz_mzv_series(const std::vector<Complex>& s, Complex t, std::uint64_t N);

// The unified two-parameter function as the split sum
//   sum_{i=0..r} (-1)^{s_{i+1}+...+s_r} zeta(s_1..s_i; -t+) zeta(s_r..s_{i+1}; t-),
// with (-1)^s = e^{i pi s}; each factor is a truncated Hurwitz-type series at
// the same N, and the budget combines the factor budgets and phases.
NumericValue zeta_hatU_numeric(const ComplexPoint& pt, std::uint64_t N);

// Closed form of the interior power sum F_a^b(-k) = sum_{a<c<b} c^k over the
// lattice (with the minus-side power convention): exact polynomial
//   (1/(k+1)) sum_j C(k+1,j) B_j ((-1)^j b^{k+1-j} - a^{k+1-j})
// in the complex values of the endpoints. OrderViolation when b is not above a.
Complex F_ab_closed(unsigned k, LatticePoint a, LatticePoint b, Complex t_plus, Complex t_minus);

// Evaluation of the slot-sum representation at s_i = -k: the sum over
// lattice chains omitting slot i, with F inserted between the neighbors.
// Requires s[i-1] to be a non-positive integer and Re(s_j) > k+2 for j != i.
// Truncated at lattice height n <= N per side; O(N * r) via prefix/suffix
// chain DP with the separable split F = phi(right) - psi(left).
NumericValue zeta_hatU_at_negative_slot(const std::vector<Complex>& s, std::size_t i, Complex t_plus,
                                        Complex t_minus, std::uint64_t N);

// One verification of the depth-reduction identity at slot i: the left side
// is zeta_hatU_at_negative_slot, the right side is the Bernoulli-weighted
// combination of zeta_hatU_numeric evaluations dictated by the case. Both
// sides are truncated at the same N, so the residual is rounding-level
// whenever the implementation is correct; budget is the combined truncation
// budget for comparing against the untruncated identity.
struct Thm14Check {
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double residual = 0.0;
    double budget = 0.0;
};

Thm14Check check_thm14(ReduceCase kase, std::vector<Complex> s, std::size_t i, unsigned k,
                       Complex t_plus, Complex t_minus, std::uint64_t N);

// Value at an all-non-positive integer point by the chain-polynomial
// recursion (each slot applies the exact interior-power-sum closed form as a
// polynomial map). Cross-check target: equals the P_r table evaluated at
// (t+, t-).
Complex zeta_hatU_nonpositive_exact(const std::vector<std::uint64_t>& k, Complex t_plus, Complex t_minus);

} // namespace fmzv
