#include "fmzv/genfun.hpp"

#include <utility>

#include "fmzv/errors.hpp"

namespace fmzv {

namespace {

// Factorials 0!..(n-1)! as rationals.
std::vector<Rational> factorials(unsigned n) {
    std::vector<Rational> f(n, Rational(1));
    for (unsigned m = 1; m < n; ++m) f[m] = f[m - 1] * Rational(m);
    return f;
}

// Univariate series in z_{var} within an nvars-variable frame: coefficient of
// z_var^q is given by gen(q).
template <typename Gen>
TruncSeries univariate(unsigned nvars, unsigned var, unsigned trunc, Gen&& gen) {
    TruncSeries s = TruncSeries::zero(nvars, trunc);
    for (unsigned q = 0; q < trunc; ++q) {
        std::vector<unsigned> e(nvars, 0);
        e[var] = q;
        s.add_term(e, gen(q));
    }
    return s;
}

// -1/(1 - e^{z_var}) ... actually 1/(1-e^{z_var}) = -(1/z_var) u(z_var)^{-1},
// represented with a z_var^{-1} prefactor and the minus sign folded in.
TruncSeries one_minus_exp_inverse(unsigned nvars, unsigned var, unsigned trunc) {
    const auto v = unit_u_inverse(trunc);
    TruncSeries s = univariate(nvars, var, trunc,
                               [&v](unsigned q) { return Poly2::constant(-v[q]); });
    s.prefactor[var] = -1;
    return s;
}

} // namespace

TruncSeries g1_series(unsigned N) {
    if (N < 1) throw DomainError("g1_series: truncation must be at least 1");
    const unsigned M = N + 1; // one degree is consumed by the pole cancellation
    const auto fact = factorials(M);

    // Numerator e^{(y+ + 1) z} - e^{y- z}: coefficient of z^q is
    // ((y+ + 1)^q - y-^q)/q!; its constant term vanishes, which is exactly
    // the cancellation of the two simple poles.
    TruncSeries numer = univariate(1, 0, M, [&fact](unsigned q) {
        Poly2 p;
        for (unsigned i = 0; i <= q; ++i) p.add_term(i, 0, Rational(binomial(q, i)));
        p.add_term(0, q, Rational(-1));
        return p * (Rational(1) / fact[q]);
    });
    return (numer * one_minus_exp_inverse(1, 0, M)).normalized();
}

TruncSeries gr_recurrence(const TruncSeries& g_prev, unsigned N) {
    if (!g_prev.is_regular()) throw DomainError("gr_recurrence: g_prev must be regular");
    if (g_prev.trunc < N + 1)
        throw TruncationTooSmall("gr_recurrence: need g_prev truncated at >= N+1 to spend one degree on the pole");
    const unsigned r = g_prev.nvars + 1;
    const unsigned M = g_prev.trunc;
    const auto fact = factorials(M);

    const TruncSeries shifted = g_prev.subst_last_var_sum(); // z_{r-1} -> z_{r-1}+z_r
    const TruncSeries plain = g_prev.extended(r);
    const TruncSeries e_zr =
        univariate(r, r - 1, M, [&fact](unsigned q) { return Poly2::constant(Rational(1) / fact[q]); });
    const TruncSeries e_ym_zr = univariate(r, r - 1, M, [&fact](unsigned q) {
        return Poly2::monomial(0, q, Rational(1) / fact[q]);
    });

    const TruncSeries bracket = shifted * e_zr - plain * e_ym_zr;
    return (bracket * one_minus_exp_inverse(r, r - 1, M)).normalized();
}

TruncSeries gr_via_recurrence(unsigned r, unsigned N) {
    if (r < 1) throw DomainError("gr_via_recurrence: depth must be at least 1");
    TruncSeries g = g1_series(N + r - 1);
    for (unsigned depth = 2; depth <= r; ++depth) g = gr_recurrence(g, g.trunc - 1);
    return g;
}

TruncSeries gr_closed_form(unsigned r, unsigned N) {
    if (r < 1) throw DomainError("gr_closed_form: depth must be at least 1");

    // All contiguous-interval linear forms z_c+...+z_d (0-based, inclusive).
    std::vector<std::pair<unsigned, unsigned>> forms;
    for (unsigned c = 0; c < r; ++c)
        for (unsigned d = c; d < r; ++d) forms.emplace_back(c, d);
    const unsigned M = N + static_cast<unsigned>(forms.size());
    const auto uinv = unit_u_inverse(M);

    // Sparse polynomial z_c + ... + z_d inside the trunc-M frame.
    const auto form_series = [&](unsigned c, unsigned d) {
        TruncSeries L = TruncSeries::zero(r, M);
        for (unsigned j = c; j <= d; ++j) {
            std::vector<unsigned> e(r, 0);
            e[j] = 1;
            L.add_term(e, Poly2::constant(Rational(1)));
        }
        return L;
    };

    // u(z_c+...+z_d)^{-1} by composing the univariate inverse with the form.
    const auto uinv_of_form = [&](unsigned c, unsigned d) {
        TruncSeries acc = TruncSeries::constant(r, M, Poly2::constant(uinv[0]));
        const TruncSeries L = form_series(c, d);
        TruncSeries power = TruncSeries::constant(r, M, Poly2::constant(Rational(1)));
        for (unsigned m = 1; m < M; ++m) {
            power = power * L;
            acc = acc + power.scaled(Poly2::constant(uinv[m]));
        }
        return acc;
    };

    // exp(sum_v alpha_v z_v) with Poly2 weights: coefficient of z^e is
    // prod_v alpha_v^{e_v} / e_v!, built by one pass over all exponents.
    const auto fact = factorials(M);
    const auto exp_linear = [&](const std::vector<Poly2>& alpha) {
        std::vector<std::vector<Poly2>> powers(r);
        for (unsigned v = 0; v < r; ++v) {
            powers[v].resize(M);
            powers[v][0] = Poly2::constant(Rational(1));
            for (unsigned q = 1; q < M; ++q) powers[v][q] = powers[v][q - 1] * alpha[v];
        }
        TruncSeries s = TruncSeries::zero(r, M);
        std::vector<unsigned> e(r, 0);
        const auto emit = [&](auto&& self, unsigned var, unsigned budget) -> void {
            if (var + 1 == r) {
                for (unsigned q = 0; q <= budget; ++q) {
                    e[var] = q;
                    Poly2 c = Poly2::constant(Rational(1));
                    for (unsigned v = 0; v < r; ++v) {
                        c = c * powers[v][e[v]];
                        c = c * (Rational(1) / fact[e[v]]);
                    }
                    s.add_term(e, c);
                }
                e[var] = 0;
                return;
            }
            for (unsigned q = 0; q <= budget; ++q) {
                e[var] = q;
                self(self, var + 1, budget - q);
            }
            e[var] = 0;
        };
        emit(emit, 0, M - 1);
        return s;
    };

    // Each 1/(1-e^L) factor contributes -1/L * u(L)^{-1}; pulling the r minus
    // signs and the (-1)^{r-i} out leaves summand_i = (-1)^i R_i / D_i with a
    // regular numerator
    //   R_i = exp(y+ W + y- V + sum_{l<=i} w_l) prod_{l<=i} u(w_l)^{-1}
    //                                          prod_{l>i} u(v_l)^{-1}
    // and D_i the product of the r interval forms. Multiplying R_i by the
    // complement D/D_i, summing, and dividing the total by every form once
    // recovers G_r without ever dividing by a non-unit series.
    TruncSeries total = TruncSeries::zero(r, M);
    for (unsigned i = 0; i <= r; ++i) {
        // Interval forms of this summand: w_l = [l, i] (1-based l <= i) and
        // v_l = [i+1, l]; exponential weights alpha_v = y+ + v for v <= i
        // (from y+ W + sum w_l) and alpha_v = y- for v > i.
        std::vector<Poly2> alpha(r);
        for (unsigned v = 0; v < r; ++v) {
            if (v < i) {
                Poly2 p = Poly2::monomial(1, 0, Rational(1));
                p.add_term(0, 0, Rational(v + 1));
                alpha[v] = p;
            } else {
                alpha[v] = Poly2::monomial(0, 1, Rational(1));
            }
        }
        TruncSeries summand = exp_linear(alpha);
        std::vector<std::vector<char>> own(r, std::vector<char>(r, 0));
        for (unsigned l = 1; l <= i; ++l) {
            summand = summand * uinv_of_form(l - 1, i - 1);
            own[l - 1][i - 1] = 1;
        }
        for (unsigned l = i + 1; l <= r; ++l) {
            summand = summand * uinv_of_form(i, l - 1);
            own[i][l - 1] = 1;
        }
        for (const auto& [c, d] : forms)
            if (!own[c][d]) summand = summand * form_series(c, d);
        if (i % 2 == 1) summand = summand.scaled(Poly2::constant(Rational(-1)));
        total = total + summand;
    }
    TruncSeries g = total;
    for (const auto& [c, d] : forms) g = divide_exact_linear(g, c, d);
    return g;
}

PTable extract_P(const TruncSeries& g, unsigned kmax) {
    if (!g.is_regular()) throw DomainError("extract_P: series must be regular");
    const unsigned r = g.nvars;
    if (g.trunc <= r * kmax)
        throw TruncationTooSmall("extract_P: coefficients up to total degree " +
                                 std::to_string(r * kmax) + " need trunc > that, have " +
                                 std::to_string(g.trunc));
    const auto fact = factorials(r * kmax + 1);
    PTable table;
    std::vector<unsigned> k(r, 0);
    while (true) {
        Rational scale(1);
        for (const auto ki : k) scale *= fact[ki];
        table[k] = g.coeff(k) * scale;
        // Odometer over {0..kmax}^r.
        unsigned pos = 0;
        for (; pos < r; ++pos) {
            if (k[pos] < kmax) {
                ++k[pos];
                break;
            }
            k[pos] = 0;
        }
        if (pos == r) break;
        if (r == 0) break;
    }
    return table;
}

PTable p_table(unsigned r, unsigned kmax) {
    return extract_P(gr_via_recurrence(r, r * kmax + 1), kmax);
}

BigInt integer_powersum_oracle(const std::vector<std::uint64_t>& k, std::uint64_t a, std::uint64_t b) {
    if (a >= b) throw DomainError("integer_powersum_oracle: requires a < b");
    const std::size_t r = k.size();
    constexpr std::uint64_t kWorkBound = 10'000'000;
    std::uint64_t work = 1;
    for (std::size_t i = 0; i < r; ++i) {
        if (work > kWorkBound / (b - a)) throw SizeGuard("integer_powersum_oracle: (b-a)^r exceeds 10^7");
        work *= b - a;
    }
    BigInt sum(0);
    if (r == 0) return BigInt(1);
    std::vector<std::uint64_t> n(r);
    std::vector<BigInt> partial(r + 1);
    partial[0] = 1;
    std::size_t level = 0;
    n[0] = a + 1;
    while (true) {
        if (n[level] + (r - 1 - level) >= b) {
            if (level == 0) break;
            --level;
            ++n[level];
            continue;
        }
        partial[level + 1] = partial[level] * pow_int(BigInt(n[level]), k[level]);
        if (level + 1 == r) {
            sum += partial[level + 1];
            ++n[level];
        } else {
            ++level;
            n[level] = n[level - 1] + 1;
        }
    }
    return sum;
}

std::string p_table_csv(const PTable& table) {
    std::string out = "k;P\n";
    for (const auto& [k, poly] : table) {
        std::string row;
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i) row += ',';
            row += std::to_string(k[i]);
        }
        out += row + ";" + poly.to_string("yp", "ym") + "\n";
    }
    return out;
}

} // namespace fmzv
