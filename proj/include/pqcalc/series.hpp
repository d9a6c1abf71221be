#pragma once

#include <vector>

#include "pqcalc/pq_numbers.hpp"

namespace pqcalc {

enum class ExpKind { LowerE, UpperE };

// Power series in x truncated at a stated order, with RationalFunction
// coefficients in p, q (and h). Arithmetic truncates consistently: binary
// operations produce the smaller of the two orders.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);

    // e_{p,q}(x) = sum p^{C(n,2)}/[n]! x^n   (LowerE)
    // E_{p,q}(x) = sum q^{C(n,2)}/[n]! x^n   (UpperE)
    // All coefficients share the single denominator [order]!, which keeps
    // series arithmetic in the uniform-denominator fast path.
    static TruncatedSeries expSeries(ExpKind kind, int order);

    // Series of a polynomial in x; terms above `order` are dropped, negative
    // x-exponents are rejected.
    static TruncatedSeries fromPolynomial(const Polynomial& f, int order);

    int order() const { return int(coeffs_.size()) - 1; }
    const RationalFunction& coeff(int k) const;
    void setCoeff(int k, RationalFunction c);
    const std::vector<RationalFunction>& coeffs() const { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries scale(const RationalFunction& c) const;

    // x -> c * x for a polynomial c free of x: coeff_k *= c^k.
    TruncatedSeries scaleArgument(const Polynomial& c) const;
    // N_p: f(x) -> f(px).
    TruncatedSeries applyN() const;
    // D_{p,q}: x^k -> [k]_{p,q} x^{k-1}; the result order drops by one.
    TruncatedSeries applyD() const;
    // Multiply by x^m. For m >= 0 top terms truncate away; for m < 0 the low
    // coefficients that would shift below x^0 must be zero.
    TruncatedSeries shiftX(int m) const;
    TruncatedSeries truncate(int order) const;

    bool isZero() const;
    bool equalThrough(const TruncatedSeries& o, int order) const;

private:
    std::vector<RationalFunction> coeffs_;  // index k = coefficient of x^k
};

}  // namespace pqcalc
