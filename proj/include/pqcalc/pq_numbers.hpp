#pragma once

#include <algorithm>
#include <vector>

#include "pqcalc/rational_function.hpp"

namespace pqcalc {

// Twin-basic number [n]_{p,q} as a Laurent polynomial. Always built from the
// finite sum sum_{k=1..n} p^{n-k} q^{k-1}, never from (p^n-q^n)/(p-q), so the
// result stays finite under the substitution p = q. Negative arguments follow
// [-n] = -(pq)^{-n} [n], which is what the defining quotient forces.
Polynomial pqNumber(long n);

// [n]_{p,q}! = prod_{k=1..n} [k]_{p,q}, with [0]! = 1.
Polynomial pqFactorial(unsigned n);

// (p,q)-Gaussian binomial [n]! / ([n-k]! [k]!); zero for k < 0 or k > n.
// Realized through exact polynomial division of factorials.
Polynomial pqGaussBinomial(unsigned n, long k);

// [n]_{p,q} at an exact rational point, via the same finite-sum / Laurent
// rules as the symbolic bracket (p = q allowed; p, q nonzero for n < 0).
Rational pqNumberAt(long n, const Rational& p, const Rational& q);
Rational pqFactorialAt(unsigned n, const Rational& p, const Rational& q);

// ---------------------------------------------------------------------------
// Single-base (q-style) objects over an arbitrary exact field F. Instantiated
// with RationalFunction for symbolic work and Rational for point sampling.

// [i]_t = 1 + t + ... + t^{i-1}, i >= 0.
template <class F>
F qBracketF(unsigned i, const F& t) {
    F sum{};
    F power{Rational(1)};
    for (unsigned j = 0; j < i; ++j) {
        sum += power;
        power *= t;
    }
    return sum;
}

// Gaussian binomial in base t via the q-Pascal recurrence
// C(n,k) = C(n-1,k-1) + t^k C(n-1,k); division-free.
template <class F>
F qGaussBinomialF(unsigned n, unsigned k, const F& t) {
    if (k > n) return F{};
    std::vector<F> row(n + 1, F{});
    row[0] = F(Rational(1));
    std::vector<F> tpow(n + 1, F(Rational(1)));
    for (unsigned j = 1; j <= n; ++j) tpow[j] = tpow[j - 1] * t;
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = std::min(i, k);; --j) {
            row[j] = (j > 0 ? row[j - 1] : F{}) + tpow[j] * row[j];
            if (j == 0) break;
        }
    return row[k];
}

// Coefficient of S^k R^{n-k} in (R+S)^n for variables with RS = t SR + h S^2:
// [n; n-k]_t * prod_{i=0..k-1} (1 + h [i]_t). The product index runs over the
// S-exponent k; the n=2 expansion R^2 + (1+t) SR + (1+h) S^2 pins this down,
// and the operator engine cross-checks it (see the binomial audit).
template <class F>
F qhBinomialF(unsigned n, unsigned k, const F& t, const F& h) {
    if (k > n) throw InvalidArgument("qhBinomial requires k <= n");
    F result = qGaussBinomialF<F>(n, n - k, t);
    F one = F(Rational(1));
    for (unsigned i = 0; i < k; ++i) result *= one + h * qBracketF<F>(i, t);
    return result;
}

// Symbolic (q,h)-binomial with explicit base parameters.
RationalFunction qhBinomial(unsigned n, unsigned k, const RationalFunction& qhat,
                            const RationalFunction& hhat);

// ---------------------------------------------------------------------------

// h_{m,s}(p,q) = q^s [m-1]_{p,q} / ([s]_{p,q} p^{m-1}); zero for m = 1,
// undefined for m != 1 and s = 0.
struct HParam {
    int m = 0;
    int s = 0;
    RationalFunction value;
};

HParam hParam(int m, int s);

// h_{m,s} at an exact rational point.
Rational hParamAt(int m, int s, const Rational& p, const Rational& q);

}  // namespace pqcalc
