#pragma once

#include <map>
#include <optional>
#include <string>

#include "pqcalc/monomial.hpp"
#include "pqcalc/rational.hpp"

namespace pqcalc {

// Exact multivariate Laurent polynomial over Q in {p, q, h, x}.
//
// Canonical form invariant: the term map never stores a zero coefficient, so
// structural equality of the maps is ring equality. Iteration order is graded
// lex, which makes every serialization deterministic.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    Polynomial() = default;
    explicit Polynomial(const Rational& c);
    explicit Polynomial(long c) : Polynomial(Rational(c)) {}
    Polynomial(const Monomial& m, const Rational& c);

    static Polynomial variable(Var v, int exponent = 1);
    static const Polynomial& zero();
    static const Polynomial& one();

    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    // The constant value if the polynomial is constant, nullopt otherwise.
    std::optional<Rational> asConstant() const;

    const TermMap& terms() const { return terms_; }
    std::size_t termCount() const { return terms_.size(); }
    Rational coeff(const Monomial& m) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator*=(const Polynomial& o);
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(unsigned n) const;

    // v -> v^m (exponent scaling); a ring homomorphism for m != 0.
    Polynomial substitutePower(Var v, int m) const;
    // Partial evaluation v -> value; negative exponents require value != 0.
    Polynomial substituteValue(Var v, const Rational& value) const;
    // v^k -> scale^k * v^k, i.e. the substitution v -> scale * v for a
    // monomial scale not involving v. (N_p acting on x-polynomials is
    // dilate(X, p).)
    Polynomial dilate(Var v, const Monomial& scale) const;
    Polynomial swapVars(Var a, Var b) const;

    // Full evaluation; every occurring variable must be assigned.
    Rational evaluate(const std::map<Var, Rational>& point) const;

    // Exact division in the Laurent ring; throws NotDivisible when b does not
    // divide *this, InvalidArgument when b == 0.
    Polynomial divExact(const Polynomial& b) const;

    bool dependsOn(Var v) const;
    int minExponent(Var v) const;  // 0 for the zero polynomial
    int maxExponent(Var v) const;
    long maxTotalDegree() const;  // 0 for the zero polynomial

    std::string str() const;

private:
    void addTerm(const Monomial& m, const Rational& c);
    TermMap terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& f);

}  // namespace pqcalc
