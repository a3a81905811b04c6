// Exact-arithmetic foundations: Seki-Bernoulli numbers and polynomials, the
// 0^0 = 1 power convention, the closed-form power sum, and the Z/p^nZ
// residue ring with its rational embedding.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "fmzv/bernoulli.hpp"
#include "fmzv/faulhaber.hpp"
#include "fmzv/mod_residue.hpp"
#include "fmzv/polyq.hpp"
#include "fmzv/rational.hpp"

using fmzv::BigInt;
using fmzv::Rational;

namespace {

Rational factorial(unsigned n) {
    Rational f(1);
    for (unsigned i = 2; i <= n; ++i) f *= Rational(i);
    return f;
}

// Independent oracle for the Seki-Bernoulli numbers: B_j / j! are the Taylor
// coefficients of z e^z / (e^z - 1) = e^z / u(z) with u(z) = (e^z - 1)/z.
// The inversion recurrence below is written out locally on purpose -- it
// shares no code with the library's Bernoulli recurrence.
std::vector<Rational> bernoulli_via_egf(unsigned N) {
    std::vector<Rational> u(N + 1), inv(N + 1), out(N + 1);
    for (unsigned j = 0; j <= N; ++j) u[j] = Rational(1) / factorial(j + 1);
    inv[0] = 1;
    for (unsigned n = 1; n <= N; ++n) {
        Rational acc(0);
        for (unsigned i = 1; i <= n; ++i) acc += u[i] * inv[n - i];
        inv[n] = -acc;
    }
    for (unsigned j = 0; j <= N; ++j) {
        Rational acc(0);
        for (unsigned i = 0; i <= j; ++i) acc += inv[i] / factorial(j - i);
        out[j] = acc * factorial(j);
    }
    return out;
}

BigInt brute_power_sum(std::uint64_t k, std::uint64_t a, std::uint64_t b) {
    BigInt acc(0);
    for (std::uint64_t n = a + 1; n < b; ++n) acc += fmzv::pow_int(BigInt(n), k);
    return acc;
}

} // namespace

TEST_CASE("Bernoulli numbers match the exponential-generating-function oracle") {
    const auto oracle = bernoulli_via_egf(30);
    const auto lib = fmzv::bernoulli_numbers(30);
    REQUIRE(lib.size() == 31);
    for (unsigned j = 0; j <= 30; ++j) {
        CAPTURE(j);
        CHECK(lib[j] == oracle[j]);
        CHECK(fmzv::bernoulli_number(j) == oracle[j]);
    }
}

TEST_CASE("Bernoulli numbers: frozen low-order values, plus-half convention") {
    CHECK(fmzv::bernoulli_number(0) == Rational(1));
    CHECK(fmzv::bernoulli_number(1) == Rational(1, 2)); // Seki convention: +1/2
    CHECK(fmzv::bernoulli_number(2) == Rational(1, 6));
    CHECK(fmzv::bernoulli_number(3) == Rational(0));
    CHECK(fmzv::bernoulli_number(4) == Rational(-1, 30));
    CHECK(fmzv::bernoulli_number(5) == Rational(0));
    CHECK(fmzv::bernoulli_number(6) == Rational(1, 42));
    CHECK(fmzv::bernoulli_number(8) == Rational(-1, 30));
    CHECK(fmzv::bernoulli_number(10) == Rational(5, 66));
    CHECK(fmzv::bernoulli_number(12) == Rational(-691, 2730));
    for (unsigned j = 3; j <= 29; j += 2) CHECK(fmzv::bernoulli_number(j) == Rational(0));
}

TEST_CASE("Bernoulli polynomial fixtures") {
    const fmzv::PolyQ b0 = fmzv::bernoulli_polynomial(0);
    CHECK(b0.coeff(0) == Rational(1));
    CHECK(b0.coeffs.size() == 1);

    const fmzv::PolyQ b1 = fmzv::bernoulli_polynomial(1);
    CHECK(b1.coeff(1) == Rational(1));
    CHECK(b1.coeff(0) == Rational(-1, 2));

    const fmzv::PolyQ b2 = fmzv::bernoulli_polynomial(2);
    CHECK(b2.coeff(2) == Rational(1));
    CHECK(b2.coeff(1) == Rational(-1));
    CHECK(b2.coeff(0) == Rational(1, 6));

    const fmzv::PolyQ b3 = fmzv::bernoulli_polynomial(3);
    CHECK(b3.coeff(3) == Rational(1));
    CHECK(b3.coeff(2) == Rational(-3, 2));
    CHECK(b3.coeff(1) == Rational(1, 2));
    CHECK(b3.coeff(0) == Rational(0));
}

TEST_CASE("Bernoulli polynomials: endpoint values and difference equation") {
    for (unsigned n = 0; n <= 24; ++n) {
        CAPTURE(n);
        const fmzv::PolyQ bn = fmzv::bernoulli_polynomial(n);
        const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
        CHECK(bn.eval(Rational(1)) == fmzv::bernoulli_number(n));
        CHECK(bn.eval(Rational(0)) == sign * fmzv::bernoulli_number(n));
    }
    // B_n(x+1) - B_n(x) = n x^{n-1}, the identity behind every power-sum
    // telescope in the library.
    const Rational points[] = {Rational(0), Rational(1, 2), Rational(-3, 7), Rational(5)};
    for (unsigned n = 1; n <= 12; ++n) {
        const fmzv::PolyQ bn = fmzv::bernoulli_polynomial(n);
        for (const Rational& x : points) {
            CAPTURE(n);
            const Rational lhs = bn.eval(x + 1) - bn.eval(x);
            const Rational rhs = Rational(n) * fmzv::pow_rat(x, static_cast<std::int64_t>(n) - 1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("power routines: 0^0 = 1 and signed exponents") {
    CHECK(fmzv::pow_int(BigInt(0), 0) == BigInt(1));
    CHECK(fmzv::pow_int(BigInt(2), 10) == BigInt(1024));
    CHECK(fmzv::pow_int(BigInt(-3), 3) == BigInt(-27));
    CHECK(fmzv::pow_rat(Rational(0), 0) == Rational(1));
    CHECK(fmzv::pow_rat(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(fmzv::pow_rat(Rational(-1, 2), 3) == Rational(-1, 8));
    CHECK_THROWS_AS(fmzv::pow_rat(Rational(0), -1), fmzv::DomainError);
}

TEST_CASE("binomial coefficients") {
    CHECK(fmzv::binomial(0, 0) == BigInt(1));
    CHECK(fmzv::binomial(5, 2) == BigInt(10));
    CHECK(fmzv::binomial(10, 7) == BigInt(120));
    CHECK(fmzv::binomial(4, 9) == BigInt(0));
    for (std::uint64_t n = 1; n <= 20; ++n)
        for (std::uint64_t k = 1; k <= n; ++k)
            CHECK(fmzv::binomial(n, k) == fmzv::binomial(n - 1, k - 1) + fmzv::binomial(n - 1, k));
}

TEST_CASE("closed-form power sum agrees with direct summation") {
    const std::uint64_t starts[] = {0, 1, 2, 5, 17};
    for (std::uint64_t k = 0; k <= 12; ++k) {
        for (const std::uint64_t a : starts) {
            for (std::uint64_t b = a + 1; b <= 40; b += 3) {
                CAPTURE(k);
                CAPTURE(a);
                CAPTURE(b);
                const Rational closed = fmzv::faulhaber_closed(k, a, b);
                CHECK(fmzv::denominator(closed) == BigInt(1));
                CHECK(fmzv::numerator(closed) == brute_power_sum(k, a, b));
            }
        }
    }
    // Empty interval (a, a+1) sums to zero; the a = 0, k = 0 case leans on
    // the 0^0 = 1 convention inside the closed form.
    CHECK(fmzv::faulhaber_closed(7, 4, 5) == Rational(0));
    CHECK(fmzv::faulhaber_closed(0, 0, 1) == Rational(0));
    CHECK(fmzv::faulhaber_closed(0, 0, 6) == Rational(5));
    CHECK_THROWS_AS(fmzv::faulhaber_closed(3, 9, 9), fmzv::DomainError);
    CHECK_THROWS_AS(fmzv::faulhaber_closed(3, 9, 4), fmzv::DomainError);
}

TEST_CASE("rational_to_string") {
    CHECK(fmzv::rational_to_string(Rational(25, 12)) == "25/12");
    CHECK(fmzv::rational_to_string(Rational(-1, 2)) == "-1/2");
    CHECK(fmzv::rational_to_string(Rational(3)) == "3");
    CHECK(fmzv::rational_to_string(Rational(0)) == "0");
}

TEST_CASE("residue ring: constructor guards") {
    CHECK_THROWS_AS(fmzv::ModResidue(7, 0, 1), fmzv::DomainError);
    // 3^21 > 2^31: the ring refuses moduli whose products could overflow.
    CHECK_THROWS_AS(fmzv::ModResidue(3, 21, 0), fmzv::DomainError);
    CHECK_THROWS_AS(fmzv::ModResidue(46349, 3, 1), fmzv::DomainError);
    const fmzv::ModResidue r(7, 2, 100);
    CHECK(r.modulus == 49);
    CHECK(r.value == 2);
}

TEST_CASE("residue ring: arithmetic, inverse, pow") {
    const fmzv::ModResidue a(7, 2, 10), b(7, 2, 45);
    CHECK((a + b).value == 6);  // 55 mod 49
    CHECK((a - b).value == 14); // -35 mod 49
    CHECK((a * b).value == 9);  // 450 mod 49
    CHECK(a.inverse().value == 5); // 10 * 5 = 50 = 1 mod 49
    CHECK((a.inverse() * a).value == 1);
    CHECK(a.pow(0).value == 1);
    CHECK(a.pow(3).value == (10 * 10 * 10) % 49);
    CHECK((a.pow(-2) * a.pow(2)).value == 1);
    CHECK_THROWS_AS(fmzv::ModResidue(7, 2, 21).inverse(), fmzv::DenominatorCollision);
    CHECK_THROWS_AS(fmzv::ModResidue(7, 2, 21).pow(-1), fmzv::DenominatorCollision);
    const fmzv::ModResidue other(5, 2, 3);
    CHECK_THROWS_AS((void)(a + other), fmzv::DomainError);
    CHECK_THROWS_AS((void)(a * fmzv::ModResidue(7, 3, 3)), fmzv::DomainError);
}

TEST_CASE("mod_embed: fixtures and collision") {
    CHECK(fmzv::mod_embed(Rational(25, 12), 5, 2).value == 0); // numerator is 0 mod 25
    CHECK(fmzv::mod_embed(Rational(1, 2), 5, 1).value == 3);   // 2 * 3 = 6 = 1 mod 5
    CHECK(fmzv::mod_embed(Rational(-1, 3), 7, 1).value == 2);  // 3 * 2 = 6 = -1 mod 7
    CHECK_THROWS_AS(fmzv::mod_embed(Rational(1, 5), 5, 1), fmzv::DenominatorCollision);
    CHECK_THROWS_AS(fmzv::mod_embed(Rational(3, 50), 5, 3), fmzv::DenominatorCollision);
}

TEST_CASE("mod_embed is a ring homomorphism on p-integral rationals") {
    std::mt19937 rng(12345);
    const std::uint64_t primes[] = {7, 13, 97};
    for (const std::uint64_t p : primes) {
        for (unsigned n = 1; n <= 3; ++n) {
            for (int trial = 0; trial < 60; ++trial) {
                const auto draw = [&]() {
                    const std::int64_t num = static_cast<std::int64_t>(rng() % 101) - 50;
                    std::uint64_t den = 1 + rng() % 50;
                    while (den % p == 0) den = 1 + rng() % 50;
                    return Rational(num, den);
                };
                const Rational q1 = draw(), q2 = draw();
                const auto e1 = fmzv::mod_embed(q1, p, n);
                const auto e2 = fmzv::mod_embed(q2, p, n);
                CAPTURE(p);
                CAPTURE(n);
                CHECK(fmzv::mod_embed(q1 + q2, p, n) == e1 + e2);
                CHECK(fmzv::mod_embed(q1 * q2, p, n) == e1 * e2);
                CHECK(fmzv::mod_embed(q1 - q2, p, n) == e1 - e2);
            }
        }
    }
}
