#pragma once

#include <random>

#include "pqcalc/polynomial.hpp"
#include "pqcalc/rational_function.hpp"

namespace pqtest {

using namespace pqcalc;

inline Polynomial P(int e = 1) { return Polynomial::variable(Var::P, e); }
inline Polynomial Q(int e = 1) { return Polynomial::variable(Var::Q, e); }
inline Polynomial H(int e = 1) { return Polynomial::variable(Var::H, e); }
inline Polynomial X(int e = 1) { return Polynomial::variable(Var::X, e); }
inline Polynomial C(long v) { return Polynomial(Rational(v)); }

// term(c, ep, eq, eh, ex) = c * p^ep q^eq h^eh x^ex
inline Polynomial term(long c, int ep, int eq = 0, int eh = 0, int ex = 0) {
    return Polynomial(Monomial{ep, eq, eh, ex}, Rational(c));
}

struct Rng {
    explicit Rng(unsigned long seed) : gen(seed) {}
    std::mt19937_64 gen;

    long intIn(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }

    Rational rational(long maxHeight = 7) {
        const long num = intIn(-maxHeight, maxHeight);
        const long den = intIn(1, maxHeight);
        return Rational(num, den);
    }

    Rational positiveRational(long maxHeight = 13) {
        return Rational(intIn(1, maxHeight), intIn(1, maxHeight));
    }

    // Laurent polynomial with <= maxTerms terms, exponents in [-4, 4].
    Polynomial polynomial(int maxTerms = 6, int expLo = -4, int expHi = 4, bool useHX = true) {
        Polynomial f;
        const int terms = int(intIn(0, maxTerms));
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            m.p = int(intIn(expLo, expHi));
            m.q = int(intIn(expLo, expHi));
            if (useHX) {
                m.h = int(intIn(expLo, expHi));
                m.x = int(intIn(expLo, expHi));
            }
            Rational c(intIn(-9, 9), intIn(1, 4));
            f += Polynomial(m, c);
        }
        return f;
    }

    Polynomial nonZeroPolynomial(int maxTerms = 6, int expLo = -4, int expHi = 4, bool useHX = true) {
        for (;;) {
            Polynomial f = polynomial(maxTerms, expLo, expHi, useHX);
            if (!f.isZero()) return f;
        }
    }
};

}  // namespace pqtest
