#include "fmzv/trunc_series.hpp"

#include <algorithm>
#include <numeric>

#include "fmzv/errors.hpp"

namespace fmzv {

namespace {

const Poly2 kZeroPoly{};

unsigned total_of(const std::vector<unsigned>& e) {
    unsigned t = 0;
    for (const auto x : e) t += x;
    return t;
}

} // namespace

TruncSeries TruncSeries::zero(unsigned nvars, unsigned trunc) {
    TruncSeries s;
    s.nvars = nvars;
    s.trunc = trunc;
    s.prefactor.assign(nvars, 0);
    return s;
}

TruncSeries TruncSeries::constant(unsigned nvars, unsigned trunc, const Poly2& c) {
    TruncSeries s = zero(nvars, trunc);
    if (!c.is_zero() && trunc > 0) s.coeffs[std::vector<unsigned>(nvars, 0)] = c;
    return s;
}

bool TruncSeries::is_regular() const {
    return std::all_of(prefactor.begin(), prefactor.end(), [](int p) { return p == 0; });
}

unsigned TruncSeries::total(const std::vector<unsigned>& e) const { return total_of(e); }

const Poly2& TruncSeries::coeff(const std::vector<unsigned>& e) const {
    const auto it = coeffs.find(e);
    return it == coeffs.end() ? kZeroPoly : it->second;
}

void TruncSeries::add_term(const std::vector<unsigned>& e, const Poly2& c) {
    if (c.is_zero() || total_of(e) >= trunc) return;
    auto [it, fresh] = coeffs.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    if (nvars != o.nvars) throw DomainError("TruncSeries: variable count mismatch in +");
    // Align the two prefactors to the componentwise minimum; shifting stored
    // exponents up by s raises that operand's reliable range by total(s).
    TruncSeries out;
    out.nvars = nvars;
    out.prefactor.resize(nvars);
    std::vector<unsigned> shift_a(nvars), shift_b(nvars);
    unsigned ta = 0, tb = 0;
    for (unsigned v = 0; v < nvars; ++v) {
        out.prefactor[v] = std::min(prefactor[v], o.prefactor[v]);
        shift_a[v] = static_cast<unsigned>(prefactor[v] - out.prefactor[v]);
        shift_b[v] = static_cast<unsigned>(o.prefactor[v] - out.prefactor[v]);
        ta += shift_a[v];
        tb += shift_b[v];
    }
    out.trunc = std::min(trunc + ta, o.trunc + tb);
    const auto pour = [&out](const std::map<std::vector<unsigned>, Poly2>& src,
                             const std::vector<unsigned>& shift) {
        for (const auto& [e, c] : src) {
            std::vector<unsigned> key(e);
            for (std::size_t v = 0; v < key.size(); ++v) key[v] += shift[v];
            out.add_term(key, c);
        }
    };
    pour(coeffs, shift_a);
    pour(o.coeffs, shift_b);
    return out;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    TruncSeries neg(o);
    for (auto& [e, c] : neg.coeffs) c = -c;
    return *this + neg;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    if (nvars != o.nvars) throw DomainError("TruncSeries: variable count mismatch in *");
    TruncSeries out = zero(nvars, std::min(trunc, o.trunc));
    for (unsigned v = 0; v < nvars; ++v) out.prefactor[v] = prefactor[v] + o.prefactor[v];
    for (const auto& [ea, ca] : coeffs) {
        const unsigned da = total_of(ea);
        if (da >= out.trunc) continue;
        for (const auto& [eb, cb] : o.coeffs) {
            if (da + total_of(eb) >= out.trunc) continue;
            std::vector<unsigned> e(ea);
            for (std::size_t v = 0; v < e.size(); ++v) e[v] += eb[v];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

TruncSeries TruncSeries::scaled(const Poly2& c) const {
    TruncSeries out = zero(nvars, trunc);
    out.prefactor = prefactor;
    if (c.is_zero()) return out;
    for (const auto& [e, v] : coeffs) out.coeffs[e] = v * c;
    return out;
}

TruncSeries TruncSeries::normalized() const {
    int total_shift = 0;
    for (const auto p : prefactor) total_shift += p;
    if (total_shift > 0 || static_cast<int>(trunc) + total_shift < 0)
        throw DomainError("TruncSeries::normalized: positive prefactor or empty reliable range");
    TruncSeries out = zero(nvars, static_cast<unsigned>(static_cast<int>(trunc) + total_shift));
    for (const auto& [e, c] : coeffs) {
        std::vector<unsigned> key(e);
        for (unsigned v = 0; v < nvars; ++v) {
            const int eff = static_cast<int>(e[v]) + prefactor[v];
            if (eff < 0)
                throw PoleResidue("TruncSeries: pole failed to cancel at variable z" +
                                  std::to_string(v + 1));
            key[v] = static_cast<unsigned>(eff);
        }
        out.add_term(key, c);
    }
    return out;
}

TruncSeries TruncSeries::truncated(unsigned n) const {
    TruncSeries out = zero(nvars, std::min(trunc, n));
    out.prefactor = prefactor;
    for (const auto& [e, c] : coeffs)
        if (total_of(e) < out.trunc) out.coeffs[e] = c;
    return out;
}

TruncSeries TruncSeries::extended(unsigned new_nvars) const {
    if (new_nvars < nvars) throw DomainError("TruncSeries::extended: cannot drop variables");
    TruncSeries out = zero(new_nvars, trunc);
    for (unsigned v = 0; v < nvars; ++v) out.prefactor[v] = prefactor[v];
    for (const auto& [e, c] : coeffs) {
        std::vector<unsigned> key(e);
        key.resize(new_nvars, 0);
        out.coeffs[std::move(key)] = c;
    }
    return out;
}

TruncSeries TruncSeries::subst_last_var_sum() const {
    if (nvars == 0) throw DomainError("TruncSeries::subst_last_var_sum: no variables");
    if (!is_regular()) throw DomainError("TruncSeries::subst_last_var_sum: requires a regular series");
    TruncSeries out = zero(nvars + 1, trunc);
    const unsigned last = nvars - 1;
    for (const auto& [e, c] : coeffs) {
        const unsigned m = e[last];
        // z_last^m -> sum_q C(m,q) z_last^{m-q} z_new^q; total degree is kept.
        for (unsigned q = 0; q <= m; ++q) {
            std::vector<unsigned> key(e);
            key[last] = m - q;
            key.push_back(q);
            out.add_term(key, c * Rational(binomial(m, q)));
        }
    }
    return out;
}

std::vector<Rational> unit_u_series(unsigned n) {
    // u(z) = (e^z - 1)/z: coefficient of z^m is 1/(m+1)!.
    std::vector<Rational> u(n);
    Rational fact(1);
    for (unsigned m = 0; m < n; ++m) {
        fact *= Rational(m + 1);
        u[m] = Rational(1) / fact;
    }
    return u;
}

std::vector<Rational> unit_u_inverse(unsigned n) {
    const auto u = unit_u_series(n);
    std::vector<Rational> v(n);
    if (n == 0) return v;
    v[0] = 1; // u has constant term 1, so the inverse exists as a power series
    for (unsigned m = 1; m < n; ++m) {
        Rational acc(0);
        for (unsigned i = 1; i <= m; ++i) acc += u[i] * v[m - i];
        v[m] = -acc;
    }
    return v;
}

TruncSeries divide_exact_linear(const TruncSeries& S, unsigned c, unsigned d) {
    if (!S.is_regular()) throw DomainError("divide_exact_linear: requires a regular series");
    if (c > d || d >= S.nvars) throw DomainError("divide_exact_linear: bad variable interval");
    if (S.trunc == 0) throw DomainError("divide_exact_linear: empty reliable range");

    // Solve Q * (z_c + ... + z_d) = S degreewise. Writing S[s] = sum_j Q[s - e_j]
    // and picking the pivot j = c gives
    //   Q[q] = S[q + e_c] - sum_{j=c+1..d} Q[q + e_c - e_j],
    // where every referenced Q entry has a strictly larger z_c exponent, so
    // filling Q in descending z_c order needs no recursion. All exponent
    // vectors below the bound are visited (cancellations in S can zero out
    // positions that Q still needs).
    TruncSeries Q = TruncSeries::zero(S.nvars, S.trunc - 1);

    std::vector<std::vector<unsigned>> order;
    std::vector<unsigned> cur(S.nvars, 0);
    const auto enumerate = [&](auto&& self, unsigned var, unsigned budget) -> void {
        if (var + 1 == S.nvars) {
            cur[var] = 0;
            for (unsigned e = 0; e <= budget; ++e) {
                order.push_back(cur);
                ++cur[var];
            }
            cur[var] = 0;
            return;
        }
        for (unsigned e = 0; e <= budget; ++e) {
            cur[var] = e;
            self(self, var + 1, budget - e);
        }
        cur[var] = 0;
    };
    if (Q.trunc > 0) enumerate(enumerate, 0, Q.trunc - 1);
    std::sort(order.begin(), order.end(), [c](const auto& a, const auto& b) {
        if (a[c] != b[c]) return a[c] > b[c];
        return a < b;
    });
    for (const auto& q : order) {
        std::vector<unsigned> s(q);
        ++s[c];
        Poly2 val = S.coeff(s);
        for (unsigned j = c + 1; j <= d; ++j) {
            if (q[j] == 0) continue;
            std::vector<unsigned> ref(q);
            ++ref[c];
            --ref[j];
            val = val - Q.coeff(ref);
        }
        Q.add_term(q, val);
    }

    // Divisibility audit: multiplying back must reproduce S on the shared range.
    TruncSeries L = TruncSeries::zero(S.nvars, S.trunc);
    for (unsigned j = c; j <= d; ++j) {
        std::vector<unsigned> e(S.nvars, 0);
        e[j] = 1;
        L.add_term(e, Poly2::constant(Rational(1)));
    }
    const TruncSeries back = Q * L;
    for (const auto& [e, coeffS] : S.coeffs)
        if (total_of(e) < Q.trunc && back.coeff(e) != coeffS)
            throw PoleResidue("divide_exact_linear: series is not divisible by the linear form");
    for (const auto& [e, coeffB] : back.coeffs)
        if (total_of(e) < Q.trunc && S.coeff(e) != coeffB)
            throw PoleResidue("divide_exact_linear: series is not divisible by the linear form");
    return Q;
}

} // namespace fmzv
