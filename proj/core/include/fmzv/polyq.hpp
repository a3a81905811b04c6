#pragma once

#include <map>
#include <string>

#include "fmzv/rational.hpp"

namespace fmzv {

// Sparse univariate polynomial over Q; no explicit zero coefficients stored.
struct PolyQ {
    std::map<unsigned, Rational> coeffs; // degree -> coefficient

    static PolyQ constant(const Rational& c) {
        PolyQ p;
        if (c != 0) p.coeffs[0] = c;
        return p;
    }

    Rational coeff(unsigned d) const {
        const auto it = coeffs.find(d);
        return it == coeffs.end() ? Rational(0) : it->second;
    }

    void add_term(unsigned d, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = coeffs.emplace(d, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }

    bool operator==(const PolyQ& o) const { return coeffs == o.coeffs; }

    // Horner is overkill for sparse maps; evaluate term by term with the
    // shared 0^0 = 1 power routine.
    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (const auto& [d, c] : coeffs) acc += c * pow_rat(x, static_cast<std::int64_t>(d));
        return acc;
    }

    std::string to_string(const std::string& var = "x") const {
        if (coeffs.empty()) return "0";
        std::string out;
        // Descending degree reads like handwriting: x^2 - 1/2*x + 1/6.
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            const Rational& c = it->second;
            const bool neg = c < 0;
            const Rational abs = neg ? Rational(-c) : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            const unsigned d = it->first;
            if (d == 0) {
                out += rational_to_string(abs);
            } else {
                if (abs != 1) out += rational_to_string(abs) + "*";
                out += var;
                if (d > 1) out += "^" + std::to_string(d);
            }
        }
        return out;
    }
};

} // namespace fmzv
