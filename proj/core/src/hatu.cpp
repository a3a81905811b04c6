#include "fmzv/hatu.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>

#include "fmzv/bernoulli.hpp"
#include "fmzv/errors.hpp"
#include "fmzv/rational.hpp"

namespace fmzv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void check_t_plus(Complex t) {
    if (t.imag() == 0.0 && t.real() <= -1.0)
        throw DomainError("t+ lies on the branch cut (-inf,-1]");
}

void check_t_minus(Complex t) {
    if (t.imag() == 0.0 && t.real() >= 1.0)
        throw DomainError("t- lies on the branch cut [1,inf)");
}

// Principal-branch power base^expo. Bases are n - t with t off [1,inf), so
// they never touch (-inf,0] and the principal logarithm is smooth.
Complex cpow(Complex base, Complex expo) { return std::exp(expo * std::log(base)); }

// e^{i pi s}, the phase that realizes (-1)^s with the principal convention.
Complex half_turn_phase(Complex s) { return std::exp(Complex(0.0, kPi) * s); }

// Plain integer power of a complex value (used by the interior-sum closed
// form, where exponents are small non-negative integers).
Complex ipow(Complex base, unsigned e) {
    Complex acc{1.0, 0.0};
    for (unsigned m = 0; m < e; ++m) acc *= base;
    return acc;
}

double bernoulli_double(unsigned j) { return static_cast<double>(bernoulli_number(j)); }

double binomial_double(unsigned n, unsigned k) { return static_cast<double>(Rational(binomial(n, k))); }

// ---------------------------------------------------------------------------
// Tail budgets.
//
// Every factor of a chain term is bounded by |(n-t)^{-s}| <= c(s) * n^{-Re s}
// with c(s) = e^{pi |Im s|} * D^{-Re s} (Re s >= 0) or (1+|t|)^{-Re s}
// (Re s < 0), where D = min_n |n-t|/n > 0. Pulling the constants out leaves a
// pure power chain sum_{n_1<...<n_m} prod n_j^{-sigma_j}; the inner sums are
// absorbed left to right into a constant K and a growth exponent g
// (sum_{n<m} n^{-t} <= K', K'*m^{1-t}, or K'*m^{0.1} for t above, below, or
// near 1), and the outermost sum is then compared against an integral.
// ---------------------------------------------------------------------------

struct ChainBounds {
    double full = 1.0; // bound on the whole (untruncated) chain sum
    double tail = 0.0; // bound on the part with outermost point > N
};

double min_distance_ratio(Complex t) {
    // min over integers n >= 1 of |n-t|/n. The real relaxation of
    // |n-t|^2/n^2 = 1 - 2 Re(t)/n + |t|^2/n^2 has its minimum at
    // n* = |t|^2/Re(t) when Re(t) > 0 and is decreasing toward 1 otherwise.
    double best = std::abs(Complex(1.0, 0.0) - t);
    if (t.real() > 0.0) {
        const double nstar = std::norm(t) / t.real();
        for (double n : {std::floor(nstar), std::ceil(nstar)}) {
            if (n >= 1.0) best = std::min(best, std::abs(Complex(n, 0.0) - t) / n);
        }
    }
    return std::min(best, 1.0);
}

ChainBounds chain_bounds(const std::vector<Complex>& s, Complex t, std::uint64_t N) {
    if (s.empty()) return {1.0, 0.0};
    const double D = min_distance_ratio(t);
    double C = 1.0;
    for (const Complex& sj : s) {
        const double sigma = sj.real();
        C *= std::exp(kPi * std::abs(sj.imag()));
        C *= sigma >= 0.0 ? std::pow(D, -sigma) : std::pow(1.0 + std::abs(t), -sigma);
    }
    double K = 1.0;
    double g = 0.0;
    for (std::size_t j = 0; j + 1 < s.size(); ++j) {
        const double tj = s[j].real() - g;
        if (tj > 1.05) {
            K *= tj / (tj - 1.0);
            g = 0.0;
        } else if (tj < 0.95) {
            K /= (1.0 - tj);
            g = 1.0 - tj;
        } else {
            K *= 10.0; // ln m <= 10 m^0.1 for all m >= 1
            g = 0.1;
        }
    }
    const double T = s.back().real() - g;
    if (T <= 1.0) return {kInf, kInf};
    const double nn = static_cast<double>(std::max<std::uint64_t>(N, 1));
    return {C * K * T / (T - 1.0), C * K * std::pow(nn, 1.0 - T) / (T - 1.0)};
}

// Budget for a product of two independently truncated factors:
// |x~ y~ - x y| <= |x~| eps_y + |y~| eps_x + eps_x eps_y.
double product_budget(Complex x, double ex, Complex y, double ey) {
    return std::abs(x) * ey + std::abs(y) * ex + ex * ey;
}

// ---------------------------------------------------------------------------
// Interior power sum closed form, split into its separable halves:
//   F_a^b(-k) = phi_k(b) - psi_k(a),
//   phi_k(x) = (1/(k+1)) sum_j C(k+1,j) B_j (-1)^j x^{k+1-j},
//   psi_k(x) = (1/(k+1)) sum_j C(k+1,j) B_j x^{k+1-j}.
// ---------------------------------------------------------------------------

Complex f_phi(unsigned k, Complex x) {
    Complex acc{0.0, 0.0};
    for (unsigned j = 0; j <= k + 1; ++j) {
        const double c = binomial_double(k + 1, j) * bernoulli_double(j);
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc += sign * c * ipow(x, k + 1 - j);
    }
    return acc / static_cast<double>(k + 1);
}

Complex f_psi(unsigned k, Complex x) {
    Complex acc{0.0, 0.0};
    for (unsigned j = 0; j <= k + 1; ++j) {
        const double c = binomial_double(k + 1, j) * bernoulli_double(j);
        acc += c * ipow(x, k + 1 - j);
    }
    return acc / static_cast<double>(k + 1);
}

// Shared series driver. `margin` is the distance the real tail sums must
// keep above the convergence line: the public entry point demands 1, while
// the interior blocks of the slot-sum evaluation only need convergence
// itself (their shifted exponents can sit within one unit of the line even
// when the inputs obey the documented slot constraints).
NumericValue hurwitz_core(const std::vector<Complex>& s, Complex t, std::uint64_t N, double margin) {
    if (t.imag() == 0.0 && t.real() >= 1.0) throw DomainError("Hurwitz parameter t lies in [1,inf)");
    const std::size_t r = s.size();
    if (r == 0) return {Complex(1.0, 0.0), 0.0};
    for (std::size_t j = 0; j < r; ++j) {
        double re_tail = 0.0;
        for (std::size_t l = j; l < r; ++l) re_tail += s[l].real();
        const double required = static_cast<double>(r - j) + margin;
        if (re_tail < required - 1e-9)
            throw DomainError("Hurwitz-type series violates the convergence margin");
    }
    // S[j](n) = sum over 0 < n_1 < ... < n_j <= n of the first j factors;
    // descending j keeps the strict ordering when extending by one point.
    std::vector<Complex> S(r + 1, Complex(0.0, 0.0));
    S[0] = Complex(1.0, 0.0);
    for (std::uint64_t n = 1; n <= N; ++n) {
        const Complex base = Complex(static_cast<double>(n), 0.0) - t;
        for (std::size_t j = r; j >= 1; --j) S[j] += cpow(base, -s[j - 1]) * S[j - 1];
    }
    return {S[r], chain_bounds(s, t, N).tail};
}

// Ascending-side chain sum for a slot vector on the minus lattice: the chain
// a_first > ... > a_last descends through -n + t-, so reindexing by n turns
// it into a Hurwitz-type series in reversed slot order, and each point's
// (-1)^s phase factors out as e^{i pi sum s}. Shifting a slot's exponent by
// an integer absorbs a val^e weight exactly, because e^{i pi e} (-1)^e = 1.
NumericValue minus_side_chain(std::vector<Complex> slots_in_chain_order, Complex t_minus, std::uint64_t N,
                              double margin) {
    std::reverse(slots_in_chain_order.begin(), slots_in_chain_order.end());
    Complex total{0.0, 0.0};
    for (const Complex& sl : slots_in_chain_order) total += sl;
    const Complex phase = half_turn_phase(total);
    NumericValue inner = hurwitz_core(slots_in_chain_order, t_minus, N, margin);
    return {phase * inner.value, std::abs(phase) * inner.tail_budget};
}

} // namespace

ComplexPoint::ComplexPoint(std::vector<Complex> s_, Complex tp, Complex tm)
    : s(std::move(s_)), t_plus(tp), t_minus(tm) {
    check_t_plus(t_plus);
    check_t_minus(t_minus);
}

bool lattice_less(LatticePoint a, LatticePoint b) {
    if (a.side != b.side) return a.side == Side::plus;
    if (a.side == Side::plus) return a.n < b.n;
    return a.n > b.n; // minus side descends as n grows
}

Complex lattice_value(LatticePoint p, Complex t_plus, Complex t_minus) {
    const double n = static_cast<double>(p.n);
    return p.side == Side::plus ? Complex(n, 0.0) + t_plus : Complex(-n, 0.0) + t_minus;
}

NumericValue hurwitz_mzv_series(const std::vector<Complex>& s, Complex t, std::uint64_t N) {
    return hurwitz_core(s, t, N, 1.0);
}

NumericValue zeta_hatU_numeric(const ComplexPoint& pt, std::uint64_t N) {
    const std::size_t r = pt.s.size();
    Complex value{0.0, 0.0};
    double budget = 0.0;
    for (std::size_t i = 0; i <= r; ++i) {
        const std::vector<Complex> head(pt.s.begin(), pt.s.begin() + static_cast<std::ptrdiff_t>(i));
        const std::vector<Complex> tail(pt.s.begin() + static_cast<std::ptrdiff_t>(i), pt.s.end());
        const NumericValue plus = hurwitz_mzv_series(head, -pt.t_plus, N);
        const NumericValue minus = minus_side_chain(tail, pt.t_minus, N, 1.0);
        value += plus.value * minus.value;
        budget += product_budget(plus.value, plus.tail_budget, minus.value, minus.tail_budget);
    }
    return {value, budget};
}

Complex F_ab_closed(unsigned k, LatticePoint a, LatticePoint b, Complex t_plus, Complex t_minus) {
    check_t_plus(t_plus);
    check_t_minus(t_minus);
    if (!lattice_less(a, b)) throw OrderViolation("interior power sum requires a strictly below b");
    return f_phi(k, lattice_value(b, t_plus, t_minus)) - f_psi(k, lattice_value(a, t_plus, t_minus));
}

NumericValue zeta_hatU_at_negative_slot(const std::vector<Complex>& s, std::size_t i, Complex t_plus,
                                        Complex t_minus, std::uint64_t N) {
    const std::size_t r = s.size();
    check_t_plus(t_plus);
    check_t_minus(t_minus);
    if (r == 0 || i == 0 || i > r) throw DomainError("slot position out of range");
    const Complex si = s[i - 1];
    if (std::abs(si.imag()) > 1e-12 || si.real() > 1e-12 ||
        std::abs(si.real() - std::round(si.real())) > 1e-12)
        throw DomainError("slot entry must be a non-positive integer");
    const unsigned k = static_cast<unsigned>(std::llround(-si.real()));
    for (std::size_t j = 0; j < r; ++j) {
        if (j + 1 == i) continue;
        if (s[j].real() <= static_cast<double>(k) + 2.0)
            throw DomainError("surrounding exponents must satisfy Re(s_j) > k+2");
    }

    // The chain sum omitting slot i: every chain splits into a plus-side
    // prefix and a minus-side suffix, and the omitted slot's neighbors c, d
    // land both on the plus side, both on the minus side, or straddling.
    // Within each split the interior sum F(c,d) = phi(d) - psi(c) separates,
    // and each half is again a Hurwitz-type block: a val^{k+1-j} weight on a
    // neighbor point shifts that slot's exponent by -(k+1-j).
    std::vector<double> cj(k + 2);
    for (unsigned j = 0; j <= k + 1; ++j)
        cj[j] = binomial_double(k + 1, j) * bernoulli_double(j) / static_cast<double>(k + 1);

    // Slot vectors, 0-based: prefix slots 0..i-2, suffix slots i..r-1.
    const auto plus_slots = [&](std::size_t upto) { // slots 0..upto-1 excluding i-1
        std::vector<Complex> v;
        for (std::size_t l = 0; l < upto; ++l)
            if (l != i - 1) v.push_back(s[l]);
        return v;
    };
    const auto minus_slots = [&](std::size_t from) { // slots from..r-1 excluding i-1, chain order
        std::vector<Complex> v;
        for (std::size_t l = from; l < r; ++l)
            if (l != i - 1) v.push_back(s[l]);
        return v;
    };

    Complex value{0.0, 0.0};
    double budget = 0.0;
    const auto accumulate = [&](Complex coef, const NumericValue& plus, const NumericValue& minus) {
        value += coef * plus.value * minus.value;
        budget += std::abs(coef) * product_budget(plus.value, plus.tail_budget, minus.value, minus.tail_budget);
    };

    // Both neighbors on the plus side: split after slot m (1-based), m >= i+1.
    for (std::size_t m = i + 1; m <= r; ++m) {
        const NumericValue minus = minus_side_chain(minus_slots(m), t_minus, N, 0.0);
        for (unsigned j = 0; j <= k + 1; ++j) {
            const unsigned e = k + 1 - j;
            const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
            std::vector<Complex> phi_vec = plus_slots(m);
            phi_vec[i - 1] -= static_cast<double>(e); // d = a_{i+1}, position i-1 after the omission
            accumulate(sgn * cj[j], hurwitz_core(phi_vec, -t_plus, N, 0.0), minus);
            if (i == 1) {
                // c is the t+ endpoint: psi contributes the constant psi(t+).
                accumulate(-cj[j] * ipow(t_plus, e), hurwitz_core(plus_slots(m), -t_plus, N, 0.0), minus);
            } else {
                std::vector<Complex> psi_vec = plus_slots(m);
                psi_vec[i - 2] -= static_cast<double>(e); // c = a_{i-1}
                accumulate(-cj[j], hurwitz_core(psi_vec, -t_plus, N, 0.0), minus);
            }
        }
    }

    // Both neighbors on the minus side: split after slot m, m <= i-2.
    for (std::size_t m = 0; i >= 2 && m <= i - 2; ++m) {
        const NumericValue plus = hurwitz_core(plus_slots(m), -t_plus, N, 0.0);
        for (unsigned j = 0; j <= k + 1; ++j) {
            const unsigned e = k + 1 - j;
            const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
            if (i == r) {
                // d is the t- endpoint: phi contributes the constant phi(t-).
                accumulate(sgn * cj[j] * ipow(t_minus, e), plus,
                           minus_side_chain(minus_slots(m), t_minus, N, 0.0));
            } else {
                std::vector<Complex> phi_vec = minus_slots(m);
                phi_vec[i - 1 - m] -= static_cast<double>(e); // d = a_{i+1}
                accumulate(sgn * cj[j], plus, minus_side_chain(phi_vec, t_minus, N, 0.0));
            }
            std::vector<Complex> psi_vec = minus_slots(m);
            psi_vec[i - 2 - m] -= static_cast<double>(e); // c = a_{i-1}
            accumulate(-cj[j], plus, minus_side_chain(psi_vec, t_minus, N, 0.0));
        }
    }

    // Straddling: prefix entirely plus, suffix entirely minus, so the pair
    // sum factorizes outright (endpoints stand in when a side is empty).
    {
        const NumericValue plus_plain = hurwitz_core(plus_slots(i - 1), -t_plus, N, 0.0);
        const NumericValue minus_plain = minus_side_chain(minus_slots(i), t_minus, N, 0.0);
        for (unsigned j = 0; j <= k + 1; ++j) {
            const unsigned e = k + 1 - j;
            const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
            if (i == r) {
                accumulate(sgn * cj[j] * ipow(t_minus, e), plus_plain, {Complex(1.0, 0.0), 0.0});
            } else {
                std::vector<Complex> phi_vec = minus_slots(i);
                phi_vec[0] -= static_cast<double>(e); // d = a_{i+1} leads the suffix
                accumulate(sgn * cj[j], plus_plain, minus_side_chain(phi_vec, t_minus, N, 0.0));
            }
            if (i == 1) {
                accumulate(-cj[j] * ipow(t_plus, e), {Complex(1.0, 0.0), 0.0}, minus_plain);
            } else {
                std::vector<Complex> psi_vec = plus_slots(i - 1);
                psi_vec[i - 2] -= static_cast<double>(e); // c = a_{i-1} ends the prefix
                accumulate(-cj[j], hurwitz_core(psi_vec, -t_plus, N, 0.0), minus_plain);
            }
        }
    }

    return {value, budget};
}

namespace {

// One right-hand-side term of the depth-reduction identity: coef times the
// unified function of the listed exponents (an empty list means the factor 1).
struct RhsTerm {
    Complex coef;
    std::vector<Complex> svec;
};

std::vector<RhsTerm> rhs_terms(ReduceCase kase, const std::vector<Complex>& s, std::size_t i, unsigned k,
                               Complex t_plus, Complex t_minus) {
    const std::size_t r = s.size();
    std::vector<RhsTerm> terms;
    for (unsigned j = 0; j <= k + 1; ++j) {
        const double cj = binomial_double(k + 1, j) * bernoulli_double(j) / static_cast<double>(k + 1);
        const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        const double shift = static_cast<double>(j) - static_cast<double>(k) - 1.0;
        const unsigned e = k + 1 - j;
        switch (kase) {
        case ReduceCase::head: {
            std::vector<Complex> shifted(s.begin() + 1, s.end());
            shifted[0] += shift;
            terms.push_back({Complex(sgn * cj, 0.0), std::move(shifted)});
            terms.push_back({-cj * ipow(t_plus, e), std::vector<Complex>(s.begin() + 1, s.end())});
            break;
        }
        case ReduceCase::middle: {
            std::vector<Complex> base;
            for (std::size_t l = 0; l < r; ++l)
                if (l != i - 1) base.push_back(s[l]);
            std::vector<Complex> right = base;
            right[i - 1] += shift;
            terms.push_back({Complex(sgn * cj, 0.0), std::move(right)});
            std::vector<Complex> left = base;
            left[i - 2] += shift;
            terms.push_back({Complex(-cj, 0.0), std::move(left)});
            break;
        }
        case ReduceCase::tail: {
            std::vector<Complex> prefix(s.begin(), s.end() - 1);
            terms.push_back({sgn * cj * ipow(t_minus, e), prefix});
            prefix.back() += shift;
            terms.push_back({Complex(-cj, 0.0), std::move(prefix)});
            break;
        }
        case ReduceCase::single: {
            terms.push_back({sgn * cj * ipow(t_minus, e), {}});
            terms.push_back({-cj * ipow(t_plus, e), {}});
            break;
        }
        }
    }
    return terms;
}

} // namespace

Thm14Check check_thm14(ReduceCase kase, std::vector<Complex> s, std::size_t i, unsigned k,
                       Complex t_plus, Complex t_minus, std::uint64_t N) {
    const std::size_t r = s.size();
    if (i == 0 || i > r) throw DomainError("slot position out of range");
    const bool consistent = (kase == ReduceCase::single && r == 1) ||
                            (kase == ReduceCase::head && i == 1 && r >= 2) ||
                            (kase == ReduceCase::tail && i == r && r >= 2) ||
                            (kase == ReduceCase::middle && i > 1 && i < r);
    if (!consistent) throw DomainError("reduction case does not match the slot position");
    s[i - 1] = Complex(-static_cast<double>(k), 0.0);

    const NumericValue lhs = zeta_hatU_at_negative_slot(s, i, t_plus, t_minus, N);

    Complex rhs{0.0, 0.0};
    double rhs_budget = 0.0;
    for (const RhsTerm& term : rhs_terms(kase, s, i, k, t_plus, t_minus)) {
        if (term.svec.empty()) {
            rhs += term.coef;
            continue;
        }
        const NumericValue v = zeta_hatU_numeric(ComplexPoint(term.svec, t_plus, t_minus), N);
        rhs += term.coef * v.value;
        rhs_budget += std::abs(term.coef) * v.tail_budget;
    }

    Thm14Check out;
    out.lhs = lhs.value;
    out.rhs = rhs;
    out.residual = std::abs(lhs.value - rhs);
    out.budget = lhs.tail_budget + rhs_budget;
    return out;
}

Complex zeta_hatU_nonpositive_exact(const std::vector<std::uint64_t>& k, Complex t_plus, Complex t_minus) {
    check_t_plus(t_plus);
    check_t_minus(t_minus);
    // Chain recursion in a complex polynomial S(x) = sum over chains below a
    // point of value x: each slot multiplies by x^{k_i} and then applies the
    // exact interior power sum from the t+ endpoint,
    //   x^m  ->  (1/(m+1)) sum_j C(m+1,j) B_j ((-1)^j x^{m+1-j} - t+^{m+1-j}),
    // which is linear, so it acts coefficientwise.
    std::vector<Complex> poly{Complex(1.0, 0.0)};
    for (std::uint64_t ki : k) {
        std::vector<Complex> lifted(poly.size() + ki, Complex(0.0, 0.0));
        for (std::size_t m = 0; m < poly.size(); ++m) lifted[m + ki] = poly[m];
        std::vector<Complex> next(lifted.size() + 1, Complex(0.0, 0.0));
        for (std::size_t m = 0; m < lifted.size(); ++m) {
            if (lifted[m] == Complex(0.0, 0.0)) continue;
            const unsigned mm = static_cast<unsigned>(m);
            for (unsigned j = 0; j <= mm + 1; ++j) {
                const double c = binomial_double(mm + 1, j) * bernoulli_double(j) / (static_cast<double>(mm) + 1.0);
                const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
                next[m + 1 - j] += lifted[m] * sgn * c;
                next[0] -= lifted[m] * c * ipow(t_plus, mm + 1 - j);
            }
        }
        while (next.size() > 1 && next.back() == Complex(0.0, 0.0)) next.pop_back();
        poly = std::move(next);
    }
    Complex acc{0.0, 0.0};
    for (std::size_t m = poly.size(); m-- > 0;) acc = acc * t_minus + poly[m];
    return acc;
}

} // namespace fmzv
