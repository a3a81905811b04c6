#include "fmzv/poly2.hpp"

#include <algorithm>
#include <vector>

namespace fmzv {

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [key, c] : o.coeffs) add_term(key.first, key.second, c);
    return *this;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 out(*this);
    out += o;
    return out;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 out(*this);
    for (const auto& [key, c] : o.coeffs) out.add_term(key.first, key.second, -c);
    return out;
}

Poly2 Poly2::operator-() const {
    Poly2 out;
    for (const auto& [key, c] : coeffs) out.coeffs[key] = -c;
    return out;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 out;
    for (const auto& [ka, ca] : coeffs)
        for (const auto& [kb, cb] : o.coeffs)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

Poly2 Poly2::operator*(const Rational& c) const {
    Poly2 out;
    if (c == 0) return out;
    for (const auto& [key, v] : coeffs) out.coeffs[key] = v * c;
    return out;
}

unsigned Poly2::total_degree() const {
    unsigned d = 0;
    for (const auto& [key, c] : coeffs) d = std::max(d, key.first + key.second);
    return d;
}

Rational Poly2::eval(const Rational& xplus, const Rational& xminus) const {
    if (coeffs.empty()) return Rational(0);
    unsigned dplus = 0, dminus = 0;
    for (const auto& [key, c] : coeffs) {
        dplus = std::max(dplus, key.first);
        dminus = std::max(dminus, key.second);
    }
    // Ascending power tables; the 0th entry encodes 0^0 = 1 like pow_rat.
    std::vector<Rational> pp(dplus + 1), pm(dminus + 1);
    pp[0] = 1;
    for (unsigned e = 1; e <= dplus; ++e) pp[e] = pp[e - 1] * xplus;
    pm[0] = 1;
    for (unsigned e = 1; e <= dminus; ++e) pm[e] = pm[e - 1] * xminus;
    Rational acc(0);
    for (const auto& [key, c] : coeffs) acc += c * pp[key.first] * pm[key.second];
    return acc;
}

std::complex<double> Poly2::eval(const std::complex<double>& xplus,
                                 const std::complex<double>& xminus) const {
    // Integer powers by repeated multiplication; exponents here are tiny.
    const auto ipow = [](std::complex<double> z, unsigned e) {
        std::complex<double> acc(1.0, 0.0);
        for (unsigned i = 0; i < e; ++i) acc *= z;
        return acc;
    };
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [key, c] : coeffs)
        acc += static_cast<double>(c) * ipow(xplus, key.first) * ipow(xminus, key.second);
    return acc;
}

PolyQ Poly2::specialize_plus_zero() const {
    PolyQ out;
    for (const auto& [key, c] : coeffs)
        if (key.first == 0) out.add_term(key.second, c);
    return out;
}

std::string Poly2::to_string(const std::string& varplus, const std::string& varminus) const {
    if (coeffs.empty()) return "0";
    std::vector<std::pair<Key, Rational>> terms(coeffs.begin(), coeffs.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const unsigned ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta > tb;
        return a.first > b.first;
    });
    std::string out;
    for (const auto& [key, c] : terms) {
        const bool neg = c < 0;
        const Rational abs = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        const auto append_var = [&mono](const std::string& v, unsigned e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        append_var(varplus, key.first);
        append_var(varminus, key.second);
        if (mono.empty()) {
            out += rational_to_string(abs);
        } else {
            if (abs != 1) out += rational_to_string(abs) + "*";
            out += mono;
        }
    }
    return out;
}

} // namespace fmzv
