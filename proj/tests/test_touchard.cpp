#include <doctest.h>

#include "pqcalc/touchard.hpp"
#include "test_util.hpp"

using namespace pqtest;

TEST_CASE("order-0 and order-1 closed forms") {
    for (unsigned n = 0; n <= 8; ++n)
        CHECK(touchardSymbolic(n, 0).value == P(int(binom2(n))));

    for (int m : {-2, -1, 1, 2, 3})
        CHECK(touchardSymbolic(1, m).value == X(m));

    CHECK(touchardSymbolic(0, 3).value == C(1));

    // T^{(1)}_2 = x + p q x^2
    CHECK(touchardSymbolic(2, 1).value == X() + P() * Q() * X(2));
}

TEST_CASE("order m = 1 gives the tilde Bell polynomials") {
    for (unsigned n = 0; n <= 6; ++n) {
        Polynomial expected;
        for (unsigned k = 0; k <= n; ++k)
            expected += P(int(binom2(k))) *
                        stirlingGeneral(n, k, 0, Polynomial::one()) * X(int(k));
        CHECK(touchardSymbolic(n, 1).value == expected);
    }
}

TEST_CASE("top coefficient is (p q^m)^{C(n,2)}") {
    for (int m : {1, 2, 3})
        for (unsigned n = 0; n <= 6; ++n) {
            const Polynomial t = touchardSymbolic(n, m).value;
            const Rational top = t.coeff(Monomial{int(binom2(n)), m * int(binom2(n)), 0, int(n) * m});
            CHECK(top == 1);
        }
}

TEST_CASE("Rodrigues form: E(-p^n x) (X^m D)^n e(x) matches the closed form") {
    for (int m : {1, 2, 3})
        for (unsigned n = 0; n <= 4; ++n) {
            const int deg = int(n) * m;
            const int order = deg + 2;
            const OperatorExpr base = OperatorExpr::term(NormalTerm{m, 0, 1});
            const OperatorExpr power = OperatorAlgebra::concrete().pow(base, n);

            const TruncatedSeries e = TruncatedSeries::expSeries(ExpKind::LowerE, order);
            const TruncatedSeries applied = applyToSeries(power, e, order);
            const Polynomial minusPn = Polynomial(Rational(-1)) * P(int(n));
            const TruncatedSeries lhs =
                TruncatedSeries::expSeries(ExpKind::UpperE, order).scaleArgument(minusPn) * applied;

            const TruncatedSeries rhs =
                TruncatedSeries::fromPolynomial(touchardSymbolic(n, m).value, order);
            CHECK(lhs.equalThrough(rhs, order));
        }
}

TEST_CASE("recurrence residual vanishes") {
    CHECK(touchardRecurrenceResidual(0, 1, 6).isZero());
    CHECK(touchardRecurrenceResidual(2, 1, 8).isZero());
    CHECK(touchardRecurrenceResidual(1, 2, 10).isZero());
    CHECK(touchardRecurrenceResidual(3, 2, 12).isZero());
    CHECK_THROWS_AS(touchardRecurrenceResidual(1, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(touchardRecurrenceResidual(1, -1, 8), InvalidArgument);
}

TEST_CASE("numeric Touchard evaluation") {
    CHECK(touchardNumeric(0, 1.0, 1.0, 0.5, 0.4) == 1.0);

    // n=2, m=1 at (p,q,x) = (1, 1/2, 1): x + pq x^2 evaluates to 1.5
    CHECK(touchardNumeric(2, 1.0, 1.0, 0.5, 1.0) == doctest::Approx(1.5).epsilon(1e-12));

    // cross-kernel agreement with the symbolic polynomial
    const std::map<Var, Rational> point{
        {Var::P, Rational(1, 2)}, {Var::Q, Rational(1, 4)}, {Var::X, Rational(1)}};
    const double expected = ratToDouble(touchardSymbolic(3, 2).value.evaluate(point));
    CHECK(touchardNumeric(3, 2.0, 0.5, 0.25, 1.0) == doctest::Approx(expected).epsilon(1e-10));

    CHECK_THROWS_AS(touchardNumeric(2, 1.0, 1.0, 1.0, 0.5), InvalidArgument);
    CHECK_THROWS_AS(touchardNumeric(2, 1.0, 1.0, 0.5, 10.0), NonConvergence);
}

TEST_CASE("real order against closed forms") {
    // T^{(m)}_1(x) = x^m and T^{(m)}_2(x) = x^{2m-1}([m]_{p,q} + p q^m x),
    // both valid for arbitrary real m (second form from applying X^m D twice
    // to e(x) by hand).
    for (double m : {0.5, 1.5, 2.25}) {
        for (double x : {0.4, 0.9}) {
            const double p = 1.0, q = 0.5;
            CHECK(touchardNumeric(1, m, p, q, x) == doctest::Approx(std::pow(x, m)).epsilon(1e-11));
            const double expected =
                std::pow(x, 2 * m - 1) * (pqNumberReal(m, p, q) + p * std::pow(q, m) * x);
            CHECK(touchardNumeric(2, m, p, q, x) == doctest::Approx(expected).epsilon(1e-11));
        }
    }
}

TEST_CASE("Dobinski formula") {
    // n=2, m=1 at (1, 1/2, 1): tilde Bell value 1 + pq = 1.5
    CHECK(dobinski(2, 1.0, 1.0, 0.5, 1.0, 1e-12) == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(dobinski(0, 2.0, 1.0, 0.5, 1.0, 1e-12) == 1.0);

    // continuity: p=1, q -> 1 approaches the classical Bell number B_3 = 5
    CHECK(dobinski(3, 1.0, 1.0, 1.0 - 1e-6, 1.0, 1e-12) == doctest::Approx(5.0).epsilon(1e-3));

    CHECK_THROWS_AS(dobinski(2, 1.0, 1.0, 1.0, 1.0, 1e-10), InvalidArgument);

    // exact mode agrees with the tilde Bell polynomial at the point
    const Rational p(1), q(1, 2), x(1);
    for (unsigned n = 0; n <= 4; ++n) {
        Rational bell(0);
        for (unsigned k = 0; k <= n; ++k)
            bell += ratPow(p, binom2(k)) *
                    stirlingTouchard(n, k, 2).evaluate({{Var::P, p}, {Var::Q, q}}) *
                    ratPow(x, k);
        const Rational value = dobinskiExact(n, 2, p, q, x, Rational(1, 100000000000000));
        const Rational err = value - bell;
        const Rational mag = err < 0 ? Rational(-err) : err;
        CHECK(mag < Rational(1, 10000000000));
    }
}
