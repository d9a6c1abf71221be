#pragma once

#include "pqcalc/polynomial.hpp"

namespace pqcalc {

// Quotient of two Laurent polynomials, reduced on demand only: equality is
// decided by cross-multiplication, not by computing a multivariate GCD.
// Construction strips common monomial content and normalizes the denominator
// to a monic leading coefficient so serialized output is deterministic.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::one()) {}
    explicit RationalFunction(const Rational& c) : num_(Polynomial(c)), den_(Polynomial::one()) {}
    explicit RationalFunction(Polynomial n) : num_(std::move(n)), den_(Polynomial::one()) {}
    RationalFunction(Polynomial n, Polynomial d);

    static const RationalFunction& zero();
    static const RationalFunction& one();

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool isZero() const { return num_.isZero(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction pow(int n) const;

    // a/b == c/d  iff  a*d == c*b.
    bool equals(const RationalFunction& o) const;
    bool operator==(const RationalFunction& o) const { return equals(o); }

    Rational evaluate(const std::map<Var, Rational>& point) const;

    std::string str() const;

private:
    void normalize();
    Polynomial num_, den_;
};

RationalFunction operator*(const Polynomial& f, const RationalFunction& r);

}  // namespace pqcalc
