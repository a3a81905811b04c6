#pragma once

#include <cstdint>
#include <string>

#include "fmzv/errors.hpp"
#include "fmzv/rational.hpp"

namespace fmzv {

// Element of Z/p^nZ tagged with its prime p and exponent n. Arithmetic is
// only defined between residues carrying the same (p, n). Moduli are kept
// below 2^31 so products fit comfortably in unsigned 64-bit intermediates;
// that covers every desk-scale sweep this library targets.
struct ModResidue {
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    std::uint64_t modulus = 0; // p^exponent, cached
    std::uint64_t value = 0;   // in [0, modulus)

    ModResidue() = default;

    ModResidue(std::uint64_t p, unsigned n, std::uint64_t v) : prime(p), exponent(n) {
        if (n == 0) throw DomainError("ModResidue: exponent must be positive");
        modulus = 1;
        for (unsigned i = 0; i < n; ++i) {
            if (modulus > (1ULL << 31) / p) throw DomainError("ModResidue: modulus p^n exceeds 2^31");
            modulus *= p;
        }
        value = v % modulus;
    }

    bool same_ring(const ModResidue& o) const { return prime == o.prime && exponent == o.exponent; }

    void check_ring(const ModResidue& o) const {
        if (!same_ring(o)) throw DomainError("ModResidue: mixed moduli in arithmetic");
    }

    ModResidue operator+(const ModResidue& o) const {
        check_ring(o);
        ModResidue r(*this);
        r.value = (value + o.value) % modulus;
        return r;
    }

    ModResidue operator-(const ModResidue& o) const {
        check_ring(o);
        ModResidue r(*this);
        r.value = (value + modulus - o.value) % modulus;
        return r;
    }

    ModResidue operator*(const ModResidue& o) const {
        check_ring(o);
        ModResidue r(*this);
        r.value = (value * o.value) % modulus;
        return r;
    }

    bool operator==(const ModResidue& o) const {
        return same_ring(o) && value == o.value;
    }
    bool operator!=(const ModResidue& o) const { return !(*this == o); }

    // Extended-Euclid inverse; non-units (multiples of p) have no inverse.
    ModResidue inverse() const {
        std::int64_t old_r = static_cast<std::int64_t>(modulus), r = static_cast<std::int64_t>(value);
        std::int64_t old_s = 0, s = 1;
        while (r != 0) {
            const std::int64_t q = old_r / r;
            std::int64_t t = old_r - q * r;
            old_r = r;
            r = t;
            t = old_s - q * s;
            old_s = s;
            s = t;
        }
        if (old_r != 1)
            throw DenominatorCollision("ModResidue: " + std::to_string(value) + " is not a unit mod " +
                                       std::to_string(prime) + "^" + std::to_string(exponent));
        ModResidue out(*this);
        out.value = static_cast<std::uint64_t>((old_s % static_cast<std::int64_t>(modulus) +
                                                static_cast<std::int64_t>(modulus)) %
                                               static_cast<std::int64_t>(modulus));
        return out;
    }

    // Signed-exponent power; negative exponents go through inverse() and may
    // therefore raise DenominatorCollision.
    ModResidue pow(std::int64_t e) const {
        ModResidue base = e < 0 ? inverse() : *this;
        std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
        ModResidue acc(*this);
        acc.value = 1 % modulus;
        while (k != 0) {
            if (k & 1) acc = acc * base;
            k >>= 1;
            if (k != 0) base = base * base;
        }
        return acc;
    }
};

// Push a rational into Z/p^nZ: numerator * denominator^{-1} mod p^n. Throws
// DenominatorCollision when p divides the denominator, i.e. when q lies
// outside the localization Z_(p); sweeps use this to skip the prime.
inline ModResidue mod_embed(const Rational& q, std::uint64_t p, unsigned n) {
    ModResidue probe(p, n, 0);
    const BigInt m(probe.modulus);
    BigInt num = numerator(q) % m;
    if (num < 0) num += m;
    BigInt den = denominator(q) % m;
    const ModResidue d(p, n, den.convert_to<std::uint64_t>());
    if (d.value % p == 0)
        throw DenominatorCollision("mod_embed: denominator of " + rational_to_string(q) +
                                   " is divisible by " + std::to_string(p));
    return ModResidue(p, n, num.convert_to<std::uint64_t>()) * d.inverse();
}

} // namespace fmzv
