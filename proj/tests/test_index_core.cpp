// Index text form and classification, plus the small algebra layers the
// rewriting engine is built on: two-variable polynomials and formal
// combinations of indices.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "fmzv/combination.hpp"
#include "fmzv/errors.hpp"
#include "fmzv/index.hpp"
#include "fmzv/poly2.hpp"

using fmzv::Combination;
using fmzv::Index;
using fmzv::Poly2;
using fmzv::Rational;

namespace {

std::size_t parse_error_position(const std::string& text) {
    try {
        (void)fmzv::parse_index(text);
    } catch (const fmzv::ParseError& e) {
        return e.position;
    }
    FAIL("expected ParseError for \"" << text << "\"");
    return static_cast<std::size_t>(-1);
}

} // namespace

TEST_CASE("classify: depth, weight, admissibility") {
    const auto full = fmzv::classify({2, 1, 3});
    CHECK(full.depth == 3);
    CHECK(full.is_positive);
    REQUIRE(full.weight.has_value());
    CHECK(*full.weight == 6);
    CHECK(full.is_admissible);
    CHECK(full.positive_count == 3);
    CHECK(full.positive_sum == 6);

    const auto one = fmzv::classify({1});
    CHECK(one.is_positive);
    CHECK(!one.is_admissible); // last entry must be >= 2
    CHECK(*one.weight == 1);

    const auto empty = fmzv::classify({});
    CHECK(empty.depth == 0);
    CHECK(empty.is_positive);
    CHECK(empty.is_admissible);
    REQUIRE(empty.weight.has_value());
    CHECK(*empty.weight == 0);

    const auto mixed = fmzv::classify({-1, 2});
    CHECK(!mixed.is_positive);
    CHECK(!mixed.weight.has_value());
    CHECK(!mixed.is_admissible);
    CHECK(mixed.positive_count == 1);
    CHECK(mixed.positive_sum == 2);

    const auto zero_tail = fmzv::classify({3, 0});
    CHECK(!zero_tail.is_positive);
    CHECK(zero_tail.positive_count == 1);
    CHECK(zero_tail.positive_sum == 3);
}

TEST_CASE("parse_index: accepted forms") {
    CHECK(fmzv::parse_index("") == Index{});
    CHECK(fmzv::parse_index("3,-1") == Index{3, -1});
    CHECK(fmzv::parse_index(" 2 , 3 ") == Index{2, 3});
    CHECK(fmzv::parse_index("+4") == Index{4});
    CHECK(fmzv::parse_index("0") == Index{0});
    CHECK(fmzv::parse_index("-0") == Index{0});
}

TEST_CASE("parse/format round-trip on random indices") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        Index k;
        const std::size_t depth = rng() % 7;
        for (std::size_t i = 0; i < depth; ++i)
            k.push_back(static_cast<std::int64_t>(rng() % 2001) - 1000);
        CHECK(fmzv::parse_index(fmzv::format_index(k)) == k);
    }
    CHECK(fmzv::format_index({}) == "");
    CHECK(fmzv::format_index({3, -1, 0}) == "3,-1,0");
}

TEST_CASE("parse_index: rejection positions") {
    CHECK(parse_error_position("1,,2") == 2);  // empty entry starts after the first comma
    CHECK(parse_error_position(",1") == 0);
    CHECK(parse_error_position("1,2,") == 3);  // the trailing comma itself
    CHECK(parse_error_position("1;2") == 1);   // first non-digit
    CHECK(parse_error_position("+") == 0);
    CHECK(parse_error_position("--3") == 1);   // second sign is not a digit
    CHECK(parse_error_position("2,1099511627777") == 2); // entry exceeds 2^40
    CHECK_THROWS_AS((void)fmzv::parse_index("1, 2x"), fmzv::ParseError);
}

TEST_CASE("Poly2: arithmetic and evaluation with 0^0 = 1") {
    Poly2 p = Poly2::monomial(1, 0, Rational(2)); // 2 x+
    p += Poly2::monomial(0, 2, Rational(1, 3));   // + 1/3 x-^2
    p += Poly2::constant(Rational(-1));
    CHECK(p.eval(Rational(0), Rational(0)) == Rational(-1));
    CHECK(p.eval(Rational(1), Rational(3)) == Rational(4));
    const Poly2 q = p * p;
    CHECK(q.eval(Rational(1), Rational(3)) == Rational(16));
    CHECK((p - p).is_zero());
    CHECK((p * Rational(0)).is_zero());
    CHECK(p.coeff(0, 2) == Rational(1, 3));
    CHECK(p.coeff(5, 5) == Rational(0));
    CHECK(p.total_degree() == 2);

    Poly2 cancel;
    cancel.add_term(1, 1, Rational(1, 2));
    cancel.add_term(1, 1, Rational(-1, 2));
    CHECK(cancel.is_zero());
}

TEST_CASE("Poly2: canonical text form") {
    Poly2 p;
    p.add_term(0, 2, Rational(1, 2));
    p.add_term(0, 1, Rational(-1, 2));
    CHECK(p.to_string("xp", "xm") == "1/2*xm^2 - 1/2*xm");
    CHECK(p.to_string("xp", "x") == "1/2*x^2 - 1/2*x");
    Poly2 m;
    m.add_term(2, 1, Rational(1));
    m.add_term(0, 0, Rational(-3));
    CHECK(m.to_string("xp", "xm") == "xp^2*xm - 3");
    CHECK(Poly2{}.to_string() == "0");
}

TEST_CASE("Poly2: specialize_plus_zero keeps pure x- terms") {
    Poly2 p;
    p.add_term(2, 1, Rational(5)); // dies under x+ = 0
    p.add_term(0, 1, Rational(2));
    p.add_term(0, 0, Rational(7)); // the x+^0 convention keeps constants
    const fmzv::PolyQ q = p.specialize_plus_zero();
    CHECK(q.coeff(1) == Rational(2));
    CHECK(q.coeff(0) == Rational(7));
    CHECK(q.coeffs.size() == 2);
}

TEST_CASE("Combination: algebra laws") {
    const Poly2 one = Poly2::constant(Rational(1));
    const Poly2 half = Poly2::constant(Rational(1, 2));
    const Combination a = Combination::single({2}, one);
    const Combination b = Combination::single({3, 1}, half);

    CHECK(fmzv::add(a, b) == fmzv::add(b, a));
    CHECK(Combination::single({2}, Poly2{}).terms.empty());

    // Scaling distributes over addition.
    const Poly2 w = Poly2::monomial(1, 1, Rational(3));
    CHECK(fmzv::scale(w, fmzv::add(a, b)) == fmzv::add(fmzv::scale(w, a), fmzv::scale(w, b)));

    // Exact cancellation removes the key entirely.
    const Combination diff = fmzv::add(a, fmzv::scale(Rational(-1), a));
    CHECK(diff.terms.empty());

    Combination merged;
    merged.add_term({2}, half);
    merged.add_term({2}, half);
    CHECK(merged == Combination::single({2}, one));

    // Keys compare by exact entry sequence; (1,2) and (2,1) stay distinct.
    Combination order_sensitive;
    order_sensitive.add_term({1, 2}, one);
    order_sensitive.add_term({2, 1}, one);
    CHECK(order_sensitive.terms.size() == 2);
}

TEST_CASE("specialize_single drops every x+ monomial") {
    Poly2 c;
    c.add_term(2, 1, Rational(5));
    c.add_term(0, 2, Rational(1, 2));
    c.add_term(0, 0, Rational(-1));
    Combination comb = Combination::single({4}, c);
    comb.add_term({7}, Poly2::monomial(1, 0, Rational(9))); // vanishes entirely

    const Combination out = fmzv::specialize_single(comb);
    REQUIRE(out.terms.count(Index{4}) == 1);
    CHECK(out.terms.count(Index{7}) == 0);
    const Poly2& kept = out.terms.at(Index{4});
    CHECK(kept.coeff(0, 2) == Rational(1, 2));
    CHECK(kept.coeff(0, 0) == Rational(-1));
    CHECK(kept.coeffs.size() == 2);
}
