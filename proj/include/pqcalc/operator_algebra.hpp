#pragma once

#include <map>
#include <vector>

#include "pqcalc/series.hpp"

namespace pqcalc {

// Normal form X^x N^n D^d (concrete reading) or V^x W^n U^d (abstract
// reading); the leftmost generator may carry any integer exponent, the other
// two are nonnegative.
struct NormalTerm {
    int x = 0;
    int n = 0;
    int d = 0;
    auto operator<=>(const NormalTerm&) const = default;
};
using AbstractTerm = NormalTerm;  // V^x W^n U^d

// Finite linear combination of normal-ordered terms with Laurent-polynomial
// coefficients in p, q, h. Canonical: no zero coefficients are stored.
class OperatorExpr {
public:
    using TermMap = std::map<NormalTerm, Polynomial>;

    OperatorExpr() = default;

    static OperatorExpr identity();
    static OperatorExpr term(NormalTerm t, Polynomial coeff = Polynomial::one());

    bool isZero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Polynomial coeff(const NormalTerm& t) const;
    void add(const NormalTerm& t, const Polynomial& c);

    OperatorExpr operator+(const OperatorExpr& o) const;
    OperatorExpr operator-(const OperatorExpr& o) const;
    OperatorExpr scale(const Polynomial& c) const;
    bool operator==(const OperatorExpr& o) const { return terms_ == o.terms_; }

private:
    TermMap terms_;
};

// Rewriting engine for the relations
//
//   U V^a = q^a V^a U + h [a]_{p,q} V^{a+s-1} W     (U past a V-power)
//   W V^a = p^a V^a W                               (W past a V-power)
//   U W   = p W U                                   (U past W)
//
// with structure constant s an integer and h a polynomial coefficient. The
// concrete operators are the instance s = 0, h = 1 under (V,W,U) =
// (X, N_p, D_{p,q}); the U-rule is then D X^a = q^a X^a D + [a] X^{a-1} N,
// valid for every integer a. Each rewrite strictly reduces the number of
// out-of-order generator pairs, so normal ordering terminates.
class OperatorAlgebra {
public:
    OperatorAlgebra(int s, Polynomial h) : s_(s), h_(std::move(h)) {}

    // X/N/D algebra.
    static const OperatorAlgebra& concrete();

    int s() const { return s_; }
    const Polynomial& h() const { return h_; }

    OperatorExpr mul(const OperatorExpr& a, const OperatorExpr& b) const;
    OperatorExpr pow(const OperatorExpr& a, unsigned n) const;

private:
    // U * (V^x W^n U^d), normal-ordered.
    OperatorExpr leftMulU(const NormalTerm& t, const Polynomial& c) const;
    OperatorExpr mulTerms(const NormalTerm& a, const NormalTerm& b) const;

    int s_;
    Polynomial h_;
};

// Action of a concrete normal-ordered expression on a polynomial in x:
// X multiplies by x, N_p sends x^k to p^k x^k, D_{p,q} sends x^k to
// [k]_{p,q} x^{k-1}.
Polynomial applyToPoly(const OperatorExpr& a, const Polynomial& f);

// Same action on a truncated series; the result is computed exactly through
// `resultOrder`, which must be reachable from the input coefficients.
TruncatedSeries applyToSeries(const OperatorExpr& a, const TruncatedSeries& f, int resultOrder);

// Normal-ordering coefficients of (VU)^n in the abstract algebra with
// structure constant s and coefficient h: entry k of the result is
// S_{s;h}(n,k|p,q), read off the term V^{s(n-k)+k} W^{n-k} U^k. Stray terms
// outside that support raise InternalInconsistency.
std::vector<Polynomial> abstractPowerVu(unsigned n, int s, const Polynomial& h);

// Normal-ordering coefficients of (X^m D)^n: entry k is the coefficient of
// X^{n(m-1)+k} N^{n-k} D^k, the order-m generalized Stirling number. Stray
// terms raise InternalInconsistency.
std::vector<Polynomial> extractStirling(unsigned n, int m);

// (R+S)^n normal-ordered in the concrete algebra; the direct expansion oracle
// for the (q,h)-binomial formula.
OperatorExpr ncBinomialExpand(const OperatorExpr& r, const OperatorExpr& s, unsigned n);

}  // namespace pqcalc
