#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "genera/laurent.hpp"

using genera::LaurentPoly;
using genera::Rational;

namespace {

LaurentPoly term(int c, int e) { return LaurentPoly::term(Rational(c), e); }

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), exp(-6, 6), coeff(-9, 9);
    LaurentPoly p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += term(coeff(rng), exp(rng));
    return p;
}

}  // namespace

TEST_CASE("zero coefficients are never stored") {
    LaurentPoly p = term(2, 3) + term(-2, 3);
    CHECK(p.is_zero());
    CHECK(p.terms().empty());
    CHECK(term(0, 5).is_zero());
    CHECK_THROWS_AS(p.degree(), std::logic_error);
    CHECK_THROWS_AS(p.valuation(), std::logic_error);
}

TEST_CASE("degree, valuation, coefficient access") {
    const LaurentPoly p = term(1, 4) + term(-3, -2) + term(2, 0);
    CHECK(p.degree() == 4);
    CHECK(p.valuation() == -2);
    CHECK(p.coeff(-2) == Rational(-3));
    CHECK(p.coeff(7) == Rational(0));
}

TEST_CASE("variable operations") {
    const LaurentPoly p = term(1, 2) + term(2, -4);
    CHECK(p.shifted(4) == term(1, 6) + term(2, 0));
    CHECK(p.inverted_variable() == term(1, -2) + term(2, 4));
    CHECK(p.substituted_power(2) == term(1, 4) + term(2, -8));
    CHECK_THROWS_AS(p.substituted_power(0), std::invalid_argument);

    const LaurentPoly sym = term(1, 2) + term(1, -2) + term(5, 0);
    CHECK(sym.is_symmetric());
    CHECK_FALSE(p.is_symmetric());
    CHECK(sym.has_even_support());
    CHECK_FALSE((sym + term(1, 1)).has_even_support());
}

TEST_CASE("evaluation") {
    const LaurentPoly p = term(1, 2) + term(1, -2);  // mu^2 + mu^-2
    CHECK(p.evaluate(Rational(2)) == Rational(17, 4));
    CHECK(p.evaluate_lambda(Rational(2)) == Rational(5, 2));
    CHECK_THROWS_AS(p.evaluate(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(term(1, 1).evaluate_lambda(Rational(2)), std::domain_error);
    CHECK(term(3, 0).evaluate(Rational(0)) == Rational(3));
}

TEST_CASE("printing") {
    const LaurentPoly p = term(2, 2) + term(-1, 0) + term(1, -4);
    CHECK(p.to_string() == "2*mu^2 - 1 + mu^-4");
    CHECK(p.to_string("lambda", 2) == "2*lambda - 1 + lambda^-2");
    CHECK(LaurentPoly(0).to_string() == "0");
    CHECK((term(1, 0) - term(1, -6)).to_string("t", 2) == "1 - t^-3");
    CHECK_THROWS_AS(term(1, 1).to_string("t", 2), std::logic_error);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 120; ++trial) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a - a == LaurentPoly(0));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(555);
    const Rational mu(3, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng);
        CHECK((a * b).evaluate(mu) == a.evaluate(mu) * b.evaluate(mu));
        CHECK((a + b).evaluate(mu) == a.evaluate(mu) + b.evaluate(mu));
    }
}
