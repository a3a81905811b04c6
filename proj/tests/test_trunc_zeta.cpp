// Truncated multiple harmonic sums: the prefix-state DP in exact rationals
// and in Z/p^nZ, checked against literal tuple enumeration and hand-computed
// fixtures.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fmzv/errors.hpp"
#include "fmzv/trunc_zeta.hpp"

using fmzv::Index;
using fmzv::Rational;
using fmzv::TruncationRange;

TEST_CASE("exact fixtures, computed by hand") {
    CHECK(fmzv::zeta_trunc_exact({1}, {0, 5}) == Rational(25, 12));
    CHECK(fmzv::zeta_trunc_exact({1, 1}, {0, 5}) == Rational(35, 24));
    CHECK(fmzv::zeta_trunc_exact({1, 2}, {0, 4}) == Rational(5, 12));
    CHECK(fmzv::zeta_trunc_exact({2}, {0, 4}) == Rational(49, 36));
    CHECK(fmzv::zeta_trunc_exact({-1}, {0, 5}) == Rational(10));
    CHECK(fmzv::zeta_trunc_exact({-1, -1}, {0, 5}) == Rational(35));
    CHECK(fmzv::zeta_trunc_exact({0}, {0, 4}) == Rational(3));
    CHECK(fmzv::zeta_trunc_exact({1}, {3, 7}) == Rational(37, 60));
}

TEST_CASE("empty index and empty tuple sets") {
    CHECK(fmzv::zeta_trunc_exact({}, {0, 5}) == Rational(1));
    CHECK(fmzv::zeta_trunc_exact({}, {0, 1}) == Rational(1));
    CHECK(fmzv::zeta_trunc_exact({1}, {0, 1}) == Rational(0));
    CHECK(fmzv::zeta_trunc_exact({1, 1}, {0, 2}) == Rational(0));
    CHECK(fmzv::zeta_trunc_exact({2, 3, -1}, {4, 6}) == Rational(0));
    CHECK(fmzv::zeta_trunc_bruteforce({1, 1}, {0, 2}) == Rational(0));
}

TEST_CASE("range validation") {
    // a == b is the empty open interval, not an error.
    CHECK(fmzv::zeta_trunc_exact({1}, {5, 5}) == Rational(0));
    CHECK(fmzv::zeta_trunc_exact({}, {5, 5}) == Rational(1));
    CHECK_THROWS_AS((void)fmzv::zeta_trunc_exact({1}, {6, 2}), fmzv::DomainError);
    CHECK_THROWS_AS((void)fmzv::zeta_trunc_mod({1}, 7, 1, {6, 2}), fmzv::DomainError);
}

TEST_CASE("DP equals literal enumeration on a sampled grid") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 60; ++trial) {
        Index k;
        const std::size_t depth = 1 + rng() % 3;
        for (std::size_t i = 0; i < depth; ++i)
            k.push_back(static_cast<std::int64_t>(rng() % 8) - 3); // entries in [-3, 4]
        const std::uint64_t a = rng() % 6;
        const std::uint64_t b = a + 1 + rng() % 20;
        CAPTURE(fmzv::format_index(k));
        CAPTURE(a);
        CAPTURE(b);
        CHECK(fmzv::zeta_trunc_exact(k, {a, b}) == fmzv::zeta_trunc_bruteforce(k, {a, b}));
    }
}

TEST_CASE("modular DP equals the exact value pushed into Z/p^nZ") {
    const Index indices[] = {{1}, {2}, {1, 1}, {3, -1}, {-2, 5}, {1, 0, 2}};
    const std::uint64_t primes[] = {5, 7, 11, 31};
    for (const Index& k : indices) {
        for (const std::uint64_t p : primes) {
            for (unsigned n = 1; n <= 3; ++n) {
                CAPTURE(fmzv::format_index(k));
                CAPTURE(p);
                CAPTURE(n);
                // Over (0, p) every summand denominator is a product of
                // integers < p, so the embedding never collides.
                const Rational exact = fmzv::zeta_trunc_exact(k, {0, p});
                CHECK(fmzv::zeta_trunc_mod(k, p, n, {0, p}) == fmzv::mod_embed(exact, p, n));
            }
        }
    }
}

TEST_CASE("the DP performs exactly (b-a-1)*depth inner updates") {
    fmzv::DpStats stats;
    (void)fmzv::zeta_trunc_exact({1, 2, -1}, {3, 20}, &stats);
    CHECK(stats.inner_updates == (20 - 3 - 1) * 3);

    fmzv::DpStats mod_stats;
    (void)fmzv::zeta_trunc_mod({1, 1}, 13, 2, {0, 13}, &mod_stats);
    CHECK(mod_stats.inner_updates == 12 * 2);

    fmzv::DpStats empty_stats;
    (void)fmzv::zeta_trunc_exact({}, {0, 9}, &empty_stats);
    CHECK(empty_stats.inner_updates == 0);
}

TEST_CASE("modular DP beyond the prime: collision iff an inverse is needed") {
    // n = 5 occurs in the range and must be inverted for positive entries.
    CHECK_THROWS_AS((void)fmzv::zeta_trunc_mod({1}, 5, 1, {0, 26}), fmzv::DenominatorCollision);
    CHECK_THROWS_AS((void)fmzv::zeta_trunc_mod({2, 1}, 5, 2, {0, 7}), fmzv::DenominatorCollision);
    // Negative entries only multiply, so the same range is fine...
    const Rational sum = fmzv::zeta_trunc_exact({-1}, {0, 26}); // 1 + ... + 25 = 325
    CHECK(sum == Rational(325));
    CHECK(fmzv::zeta_trunc_mod({-1}, 5, 1, {0, 26}).value == 0);
    // ... and ranges entirely above the prime's multiples can still invert.
    CHECK(fmzv::zeta_trunc_mod({1}, 5, 1, {5, 10}) ==
          fmzv::mod_embed(fmzv::zeta_trunc_exact({1}, {5, 10}), 5, 1));
}

TEST_CASE("Wolstenholme-type residues over the full range (0, p)") {
    CHECK(fmzv::zeta_trunc_mod({1}, 13, 2, {0, 13}).value == 0);
    CHECK(fmzv::zeta_trunc_mod({1, 1}, 13, 1, {0, 13}).value == 0);
    CHECK(fmzv::zeta_trunc_mod({1}, 97, 2, {0, 97}).value == 0);
}

TEST_CASE("brute force is guarded against runaway enumeration") {
    CHECK_THROWS_AS((void)fmzv::zeta_trunc_bruteforce({1, 1, 1, 1}, {0, 300}), fmzv::SizeGuard);
}

TEST_CASE("evaluation cache returns the same values as direct calls") {
    fmzv::ZetaExactCache cache;
    const Rational first = cache.get({1, 2}, {0, 9});
    const Rational second = cache.get({1, 2}, {0, 9});
    CHECK(first == second);
    CHECK(first == fmzv::zeta_trunc_exact({1, 2}, {0, 9}));
    CHECK(cache.values.size() == 1);
    (void)cache.get({1, 2}, {0, 10});
    CHECK(cache.values.size() == 2);
}
