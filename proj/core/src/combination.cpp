#include "fmzv/combination.hpp"

namespace fmzv {

void Combination::add_term(const Index& k, const Poly2& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms.emplace(k, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

Combination add(const Combination& a, const Combination& b) {
    Combination out(a);
    for (const auto& [k, c] : b.terms) out.add_term(k, c);
    return out;
}

Combination scale(const Poly2& c, const Combination& a) {
    Combination out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : a.terms) out.add_term(k, c * v);
    return out;
}

Combination scale(const Rational& c, const Combination& a) {
    return scale(Poly2::constant(c), a);
}

Combination specialize_single(const Combination& a) {
    Combination out;
    for (const auto& [k, v] : a.terms) {
        Poly2 kept;
        for (const auto& [key, c] : v.coeffs)
            if (key.first == 0) kept.add_term(0, key.second, c);
        out.add_term(k, kept);
    }
    return out;
}

} // namespace fmzv
