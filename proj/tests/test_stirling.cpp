#include <doctest.h>

#include "pqcalc/operator_algebra.hpp"
#include "pqcalc/stirling.hpp"
#include "test_util.hpp"

using namespace pqtest;

TEST_CASE("worked example n <= 3, symbolic h") {
    const Polynomial h = H();
    for (int s = 0; s <= 2; ++s) {
        CHECK(stirlingGeneral(1, 1, s, h) == C(1));
        CHECK(stirlingGeneral(2, 1, s, h) == H());
        CHECK(stirlingGeneral(2, 2, s, h) == Q());
        CHECK(stirlingGeneral(3, 1, s, h) == H(2) * pqNumber(s + 1));
        CHECK(stirlingGeneral(3, 2, s, h) == H() * Q() * (pqNumber(2) + P() * Q(s)));
        CHECK(stirlingGeneral(3, 3, s, h) == Q(3));
        CHECK(stirlingGeneral(3, 0, s, h).isZero());
        CHECK(stirlingGeneral(0, 0, s, h) == C(1));
    }
}

TEST_CASE("Bell polynomials") {
    const StirlingVariant general = StirlingVariant::general(1, H());
    CHECK(bellPolynomial(2, general, Polynomial::one()) == H() + Q());
    CHECK(bellPolynomial(3, general, Polynomial::one()) ==
          Q(3) + H() * Q() * (pqNumber(2) + Q(1) * P()) + H(2) * pqNumber(2));

    CHECK(bellPolynomial(4, StirlingVariant::classical(), Polynomial::one()) == C(15));
    CHECK(bellPolynomial(0, StirlingVariant::classical(), Polynomial::one()) == C(1));
}

TEST_CASE("classical enumeration oracle") {
    const auto row4 = classicalStirlingRow(4);
    CHECK(row4.at(1) == 1);
    CHECK(row4.at(2) == 7);
    CHECK(row4.at(3) == 6);
    CHECK(row4.at(4) == 1);
    CHECK(row4.size() == 4);

    const auto row0 = classicalStirlingRow(0);
    CHECK(row0.at(0) == 1);

    CHECK(classicalBell(3) == 5);
    CHECK(classicalBell(8) == 4140);
    CHECK_THROWS_AS(classicalStirlingRow(13), ResourceLimit);
}

TEST_CASE("diagonal and first column closed forms") {
    for (int s = 0; s <= 2; ++s) {
        for (unsigned n = 1; n <= 10; ++n)
            CHECK(stirlingGeneral(n, n, s, H()) == Q(int(binom2(n))));
        for (unsigned n = 1; n <= 8; ++n) {
            Polynomial expected = H(int(n) - 1);
            for (unsigned i = 1; i + 1 <= n; ++i) expected *= pqNumber(s * long(i - 1) + 1);
            CHECK(stirlingGeneral(n, 1, s, H()) == expected);
        }
    }
}

TEST_CASE("h-homogeneity S_{s;h}(n,k) = h^{n-k} S_{s;1}(n,k)") {
    for (int s = 0; s <= 2; ++s)
        for (unsigned n = 0; n <= 8; ++n)
            for (unsigned k = 0; k <= n; ++k)
                CHECK(stirlingGeneral(n, k, s, H()) ==
                      H(int(n - k)) * stirlingGeneral(n, k, s, Polynomial::one()));
}

TEST_CASE("oracle equivalence, abstract engine") {
    for (int s = 0; s <= 2; ++s)
        for (unsigned n = 0; n <= 6; ++n) {
            const auto oracle = abstractPowerVu(n, s, H());
            for (unsigned k = 0; k <= n; ++k)
                CHECK(stirlingGeneral(n, k, s, H()) == oracle[k]);
        }
}

TEST_CASE("oracle equivalence, Touchard orders") {
    for (int m : {-2, -1, 1, 2, 3})
        for (unsigned n = 0; n <= 5; ++n) {
            const auto oracle = extractStirling(n, m);
            for (unsigned k = 0; k <= n; ++k)
                CHECK(stirlingTouchard(n, k, m) == oracle[k]);
        }
    CHECK_THROWS_AS(stirlingTouchard(2, 1, 0), InvalidArgument);
}

TEST_CASE("specialization chain of the table variants") {
    const StirlingTable pq(StirlingVariant::pq(), 6);
    const StirlingTable qTable(StirlingVariant::qVariant(), 6);
    const StirlingTable classical(StirlingVariant::classical(), 6);

    // general(0,1) equals S_{p,q}; its p=1 image satisfies the q-recurrence
    // S_q(n,k) = q^{k-1} S_q(n-1,k-1) + [k]_q S_q(n-1,k).
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            CHECK(pq.rawEntry(n, k) == stirlingGeneral(n, k, 0, Polynomial::one()));
            CHECK(qTable.rawEntry(n, k) ==
                  pq.rawEntry(n, k).substituteValue(Var::P, Rational(1)));
            const Polynomial qBracket = pqNumber(k).substituteValue(Var::P, Rational(1));
            CHECK(qTable.rawEntry(n, k) ==
                  Q(int(k) - 1) * qTable.rawEntry(n - 1, k - 1) +
                      qBracket * qTable.rawEntry(n - 1, k));
        }

    // classical equals the enumeration
    for (unsigned n = 0; n <= 6; ++n) {
        const auto counts = classicalStirlingRow(n);
        for (unsigned k = 0; k <= n; ++k) {
            Int expected = 0;
            if (auto it = counts.find(k); it != counts.end()) expected = it->second;
            CHECK(classical.rawEntry(n, k) == Polynomial(Rational(expected)));
        }
    }

    // tilde at p = 1 is the plain table
    const StirlingTable qTilde(StirlingVariant::qVariant(true), 6);
    for (unsigned n = 0; n <= 6; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(qTilde.entry(n, k) == qTable.rawEntry(n, k));
}

TEST_CASE("Lang-style numbers: order-m Stirling at p=q=1") {
    // Independent recurrence at p=q=1: L(n+1,k) = L(n,k-1) + ((m-1)(n-k)+mk) L(n,k).
    for (int m : {1, 2, 3}) {
        std::vector<std::vector<Rational>> lang{{Rational(1)}};
        for (unsigned n = 0; n < 6; ++n) {
            std::vector<Rational> row(n + 2, Rational(0));
            for (unsigned k = 1; k <= n + 1; ++k) {
                row[k] = lang[n][k - 1];
                if (k <= n)
                    row[k] += Rational((m - 1) * (long(n) - long(k)) + m * long(k)) * lang[n][k];
            }
            lang.push_back(row);
        }
        for (unsigned n = 0; n <= 6; ++n)
            for (unsigned k = 0; k <= n; ++k)
                CHECK(stirlingTouchard(n, k, m)
                          .substituteValue(Var::P, Rational(1))
                          .substituteValue(Var::Q, Rational(1)) == Polynomial(lang[n][k]));
    }
}

TEST_CASE("initial conditions") {
    for (int s = 0; s <= 2; ++s) {
        for (unsigned n = 1; n <= 5; ++n) CHECK(stirlingGeneral(n, 0, s, H()).isZero());
        for (unsigned k = 1; k <= 5; ++k) CHECK(stirlingGeneral(0, k, s, H()).isZero());
        for (unsigned n = 0; n <= 5; ++n)
            for (unsigned k = n + 1; k <= n + 3; ++k)
                CHECK(stirlingGeneral(n, k, s, H()).isZero());
    }
}
