#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>

#include "fmzv/polyq.hpp"
#include "fmzv/rational.hpp"

namespace fmzv {

// Sparse polynomial over Q in two formal variables: x+ (exponent `dplus`)
// and x- (exponent `dminus`). Depending on context the variables stand for
// the truncation endpoints (a, b), the prime (0, p), or the deformation
// parameters (t+, t-) / (y+, y-); the algebra is the same in every case.
// No zero coefficients are stored; evaluation uses 0^0 = 1.
struct Poly2 {
    using Key = std::pair<unsigned, unsigned>; // (dplus, dminus)
    std::map<Key, Rational> coeffs;

    static Poly2 constant(const Rational& c) {
        Poly2 p;
        if (c != 0) p.coeffs[{0, 0}] = c;
        return p;
    }
    static Poly2 monomial(unsigned dplus, unsigned dminus, const Rational& c) {
        Poly2 p;
        if (c != 0) p.coeffs[{dplus, dminus}] = c;
        return p;
    }

    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const Poly2& o) const { return coeffs == o.coeffs; }
    bool operator!=(const Poly2& o) const { return !(*this == o); }

    Rational coeff(unsigned dplus, unsigned dminus) const {
        const auto it = coeffs.find({dplus, dminus});
        return it == coeffs.end() ? Rational(0) : it->second;
    }

    void add_term(unsigned dplus, unsigned dminus, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = coeffs.emplace(Key{dplus, dminus}, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    Poly2& operator+=(const Poly2& o);
    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator-() const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 operator*(const Rational& c) const;

    unsigned total_degree() const; // 0 for the zero polynomial

    Rational eval(const Rational& xplus, const Rational& xminus) const;
    std::complex<double> eval(const std::complex<double>& xplus, const std::complex<double>& xminus) const;

    // Substitute x+ = 0 (0^0 = 1 keeps pure x- terms); result lives in Q[x-].
    PolyQ specialize_plus_zero() const;

    // Canonical text: terms in descending (total degree, dplus, dminus).
    std::string to_string(const std::string& varplus = "xp", const std::string& varminus = "xm") const;
};

inline Poly2 operator*(const Rational& c, const Poly2& p) { return p * c; }

} // namespace fmzv
