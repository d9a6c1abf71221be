#include <doctest.h>

#include "test_util.hpp"

using namespace pqtest;

TEST_CASE("arithmetic matches hand-expanded forms") {
    // (p+q)^2 = p^2 + 2pq + q^2
    CHECK((P() + Q()) * (P() + Q()) == term(1, 2) + term(2, 1, 1) + term(1, 0, 2));
    // (p-q) + (q-p) = 0, empty term map
    CHECK(((P() - Q()) + (Q() - P())).isZero());
    // (pq)^3 = p^3 q^3
    CHECK((P() * Q()).pow(3) == term(1, 3, 3));
}

TEST_CASE("substitutePower scales exponents") {
    CHECK(Q(3).substitutePower(Var::Q, 2) == Q(6));
    CHECK((P() + Q()).substitutePower(Var::Q, 3) == P() + Q(3));
    CHECK_THROWS_AS(P().substitutePower(Var::P, 0), InvalidArgument);
}

TEST_CASE("evaluate") {
    // p^3 + p^2 q + p q^2 + q^3 at p=2, q=1: 8+4+2+1 = 15
    const Polynomial f = term(1, 3) + term(1, 2, 1) + term(1, 1, 2) + term(1, 0, 3);
    CHECK(f.evaluate({{Var::P, Rational(2)}, {Var::Q, Rational(1)}}) == 15);

    CHECK(Polynomial(Rational(1)).evaluate({}) == 1);

    // (p-q)/(p-q) at p=3, q=2
    const RationalFunction identityQuotient(P() - Q(), P() - Q());
    CHECK(identityQuotient.evaluate({{Var::P, Rational(3)}, {Var::Q, Rational(2)}}) == 1);

    CHECK_THROWS_AS(f.evaluate({{Var::P, Rational(2)}}), EvaluationError);
    CHECK_THROWS_AS(P(-1).evaluate({{Var::P, Rational(0)}}), EvaluationError);
}

TEST_CASE("divExact") {
    // (p^2 - q^2)/(p - q) = p + q
    CHECK((P(2) - Q(2)).divExact(P() - Q()) == P() + Q());
    CHECK_THROWS_AS((P() + Q()).divExact(P() - Q()), NotDivisible);
    CHECK_THROWS_AS(P().divExact(Polynomial::zero()), InvalidArgument);
    // Laurent: (p^-1 - q) / p^-1 = 1 - pq
    CHECK((P(-1) - Q()).divExact(P(-1)) == C(1) - P() * Q());
}

TEST_CASE("ring laws on random Laurent polynomials") {
    Rng rng(20240817);
    for (int i = 0; i < 200; ++i) {
        const Polynomial a = rng.polynomial(), b = rng.polynomial(), c = rng.polynomial();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).isZero());
    }
}

TEST_CASE("substitutePower is a ring homomorphism") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const Polynomial a = rng.polynomial(), b = rng.polynomial();
        const int m = int(rng.intIn(1, 4)) * (rng.intIn(0, 1) ? 1 : -1);
        CHECK((a + b).substitutePower(Var::Q, m) ==
              a.substitutePower(Var::Q, m) + b.substitutePower(Var::Q, m));
        CHECK((a * b).substitutePower(Var::Q, m) ==
              a.substitutePower(Var::Q, m) * b.substitutePower(Var::Q, m));
    }
}

TEST_CASE("evaluate is a ring homomorphism") {
    Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        const Polynomial a = rng.polynomial(), b = rng.polynomial();
        std::map<Var, Rational> point;
        for (Var v : kAllVars) {
            Rational r = rng.rational();
            if (r == 0) r = Rational(1);  // negative exponents need nonzero values
            point[v] = r;
        }
        CHECK((a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point));
        CHECK((a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point));
    }
}

TEST_CASE("divExact(a*b, b) == a") {
    Rng rng(4242);
    for (int i = 0; i < 100; ++i) {
        const Polynomial a = rng.polynomial();
        const Polynomial b = rng.nonZeroPolynomial();
        CHECK((a * b).divExact(b) == a);
    }
}

TEST_CASE("rational function equality is an equivalence relation") {
    Rng rng(1234);
    for (int i = 0; i < 60; ++i) {
        const Polynomial n1 = rng.polynomial();
        const Polynomial d1 = rng.nonZeroPolynomial();
        const Polynomial scale1 = rng.nonZeroPolynomial(3);
        const Polynomial scale2 = rng.nonZeroPolynomial(3);
        const RationalFunction a(n1, d1);
        const RationalFunction b(n1 * scale1, d1 * scale1);
        const RationalFunction c(n1 * scale2, d1 * scale2);
        CHECK(a == a);
        CHECK(a == b);
        CHECK(b == a);
        CHECK(b == c);
        CHECK(a == c);  // transitivity across distinct representatives
    }
    CHECK(RationalFunction(P(2) - Q(2), P() - Q()) == RationalFunction(P() + Q()));
    CHECK_FALSE(RationalFunction(C(1), P() - Q()) == RationalFunction(C(1), Q() - P()));
}

TEST_CASE("rational function arithmetic") {
    const RationalFunction half(C(1), C(2));
    CHECK((half + half) == RationalFunction::one());
    const RationalFunction f(P(), P() - Q());
    CHECK((f - f).isZero());
    CHECK((f / f) == RationalFunction::one());
    CHECK(f.pow(-1) == RationalFunction(P() - Q(), P()));
    CHECK_THROWS_AS(RationalFunction(P(), Polynomial::zero()), InvalidArgument);
    CHECK_THROWS_AS(f / RationalFunction::zero(), InvalidArgument);
}

TEST_CASE("canonical term order is graded lex and deterministic") {
    const Polynomial f = X() + P() * Q() + C(3) + P(2);
    std::vector<Monomial> order;
    for (const auto& [m, c] : f.terms()) order.push_back(m);
    REQUIRE(order.size() == 4);
    CHECK(order[0] == Monomial{});                  // degree 0
    CHECK(order[1] == Monomial{0, 0, 0, 1});        // degree 1: x after p,q,h
    CHECK(order[2] == Monomial{1, 1, 0, 0});        // degree 2: p q
    CHECK(order[3] == Monomial{2, 0, 0, 0});        // degree 2: p^2 sorts above pq on p-exponent
    CHECK(f.str() == "p^2 + p*q + x + 3");
}
