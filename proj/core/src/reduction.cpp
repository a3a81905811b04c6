#include "fmzv/reduction.hpp"

#include <algorithm>

#include "fmzv/bernoulli.hpp"
#include "fmzv/errors.hpp"

namespace fmzv {

std::string to_string(ReduceCase c) {
    switch (c) {
        case ReduceCase::head: return "head";
        case ReduceCase::middle: return "middle";
        case ReduceCase::tail: return "tail";
        case ReduceCase::single: return "single";
    }
    return "?";
}

namespace {

// c_j = C(k+1,j) * B_j / (k+1) for j = 0..k+1.
std::vector<Rational> reduction_weights(std::uint64_t k) {
    const auto B = bernoulli_numbers(static_cast<unsigned>(k) + 1);
    std::vector<Rational> c(k + 2);
    for (std::uint64_t j = 0; j <= k + 1; ++j)
        c[j] = Rational(binomial(k + 1, j)) * B[j] / Rational(k + 1);
    return c;
}

Index erase_at(const Index& k, std::size_t pos0) {
    Index out(k);
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos0));
    return out;
}

} // namespace

Combination reduce_entry(const Index& k, std::size_t i) {
    const std::size_t r = k.size();
    if (r < 2) throw DomainError("reduce_entry: depth must be at least 2");
    if (i < 1 || i > r) throw DomainError("reduce_entry: position out of range");
    const std::int64_t entry = k[i - 1];
    if (entry > 0) throw DomainError("reduce_entry: entry at position " + std::to_string(i) + " is positive");
    const auto kk = static_cast<std::uint64_t>(-entry);
    const auto c = reduction_weights(kk);

    Combination out;
    for (std::uint64_t j = 0; j <= kk + 1; ++j) {
        if (c[j] == 0) continue;
        const Rational signed_c = (j % 2 == 0) ? c[j] : Rational(-c[j]);
        const std::int64_t shift = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(kk) - 1;
        const unsigned tpow = static_cast<unsigned>(kk + 1 - j);
        if (i == 1) {
            Index shifted = erase_at(k, 0);
            shifted[0] += shift;
            out.add_term(shifted, Poly2::constant(signed_c));
            out.add_term(erase_at(k, 0), Poly2::monomial(tpow, 0, -c[j]));
        } else if (i == r) {
            Index shifted = erase_at(k, r - 1);
            shifted[r - 2] += shift;
            out.add_term(erase_at(k, r - 1), Poly2::monomial(0, tpow, signed_c));
            out.add_term(shifted, Poly2::constant(-c[j]));
        } else {
            Index right = erase_at(k, i - 1); // former position i+1 is now i-1 (0-based)
            right[i - 1] += shift;
            out.add_term(right, Poly2::constant(signed_c));
            Index left = erase_at(k, i - 1);
            left[i - 2] += shift;
            out.add_term(left, Poly2::constant(-c[j]));
        }
    }
    return out;
}

Poly2 reduce_depth1(std::int64_t entry) {
    if (entry > 0) throw DomainError("reduce_depth1: entry must be non-positive");
    const auto kk = static_cast<std::uint64_t>(-entry);
    const auto c = reduction_weights(kk);
    Poly2 out;
    for (std::uint64_t j = 0; j <= kk + 1; ++j) {
        const Rational signed_c = (j % 2 == 0) ? c[j] : Rational(-c[j]);
        const unsigned tpow = static_cast<unsigned>(kk + 1 - j);
        out.add_term(0, tpow, signed_c);
        out.add_term(tpow, 0, -c[j]);
    }
    return out;
}

ReductionTrace reduce_full(const Index& k, EliminationOrder strategy) {
    ReductionTrace trace;
    std::map<Index, Poly2> pending;
    pending[k] = Poly2::constant(Rational(1));

    // Rounds by descending depth keep merged sub-indices together: every key
    // of depth d is rewritten before any depth d-1 key is looked at.
    for (std::size_t depth = k.size(); depth >= 1 && !pending.empty(); --depth) {
        std::map<Index, Poly2> current;
        for (auto it = pending.begin(); it != pending.end();) {
            if (it->first.size() == depth) {
                current.insert(*it);
                it = pending.erase(it);
            } else {
                ++it;
            }
        }
        for (const auto& [idx, coeff] : current) {
            if (classify(idx).is_positive) {
                trace.final.add_term(idx, coeff);
                continue;
            }
            if (depth == 1) {
                trace.steps.push_back({idx, 1, ReduceCase::single});
                trace.final.add_term(Index{}, coeff * reduce_depth1(idx[0]));
                continue;
            }
            std::size_t pos = 0; // 1-based position of the entry to eliminate
            if (strategy == EliminationOrder::leftmost) {
                for (std::size_t p = 1; p <= depth && pos == 0; ++p)
                    if (idx[p - 1] <= 0) pos = p;
            } else {
                for (std::size_t p = depth; p >= 1 && pos == 0; --p)
                    if (idx[p - 1] <= 0) pos = p;
            }
            const ReduceCase tag =
                pos == 1 ? ReduceCase::head : (pos == depth ? ReduceCase::tail : ReduceCase::middle);
            trace.steps.push_back({idx, pos, tag});
            for (const auto& [sub, c2] : reduce_entry(idx, pos).terms) {
                const Poly2 scaled = coeff * c2;
                if (scaled.is_zero()) continue;
                auto [slot, fresh] = pending.emplace(sub, scaled);
                if (!fresh) {
                    slot->second += scaled;
                    if (slot->second.is_zero()) pending.erase(slot);
                }
            }
        }
    }
    // Only the depth-0 empty index can remain, and it is positive by fiat.
    for (const auto& [idx, coeff] : pending) trace.final.add_term(idx, coeff);
    return trace;
}

ModResidue evaluate_combination(const Combination& c, std::uint64_t p, unsigned n, std::uint64_t a,
                                std::uint64_t b) {
    ModResidue acc(p, n, 0);
    const Rational ra(a), rb(b);
    for (const auto& [idx, poly] : c.terms)
        acc = acc + mod_embed(poly.eval(ra, rb), p, n) * zeta_trunc_mod(idx, p, n, {a, b});
    return acc;
}

ModResidue evaluate_combination(const Combination& c, std::uint64_t p, unsigned n) {
    return evaluate_combination(c, p, n, 0, p);
}

Rational evaluate_combination_exact(const Combination& c, std::uint64_t a, std::uint64_t b,
                                    ZetaExactCache* cache) {
    Rational acc(0);
    const Rational ra(a), rb(b);
    for (const auto& [idx, poly] : c.terms) {
        const Rational value = cache ? cache->get(idx, {a, b}) : zeta_trunc_exact(idx, {a, b});
        acc += poly.eval(ra, rb) * value;
    }
    return acc;
}

} // namespace fmzv
