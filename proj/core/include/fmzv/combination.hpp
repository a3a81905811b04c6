#pragma once

#include <map>

#include "fmzv/index.hpp"
#include "fmzv/poly2.hpp"

namespace fmzv {

// Formal Q[x+,x-]-linear combination of indices: a finite map Index -> Poly2
// with no zero polynomials stored. Keys are compared by exact entry sequence
// (no reordering — the underlying values are order-sensitive).
struct Combination {
    std::map<Index, Poly2> terms;

    static Combination single(const Index& k, const Poly2& coeff) {
        Combination c;
        if (!coeff.is_zero()) c.terms[k] = coeff;
        return c;
    }

    bool operator==(const Combination& o) const { return terms == o.terms; }

    void add_term(const Index& k, const Poly2& coeff);
};

Combination add(const Combination& a, const Combination& b);
Combination scale(const Poly2& c, const Combination& a);
Combination scale(const Rational& c, const Combination& a);

// Substitute x+ = 0 in every coefficient, realizing the single-variable
// specialization (x- is then the lone variable, usually written x).
Combination specialize_single(const Combination& a);

} // namespace fmzv
