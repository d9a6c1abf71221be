#include "pqcalc/pq_numbers.hpp"

namespace pqcalc {

Polynomial pqNumber(long n) {
    if (n == 0) return Polynomial::zero();
    if (n < 0) {
        // [-n] = -(pq)^{-n} [n]  (exponents here are negative: n < 0).
        const Polynomial shift(Monomial{int(n), int(n), 0, 0}, Rational(-1));
        return shift * pqNumber(-n);
    }
    Polynomial sum;
    for (long k = 1; k <= n; ++k)
        sum += Polynomial(Monomial{int(n - k), int(k - 1), 0, 0}, Rational(1));
    return sum;
}

Polynomial pqFactorial(unsigned n) {
    Polynomial prod = Polynomial::one();
    for (unsigned k = 1; k <= n; ++k) prod *= pqNumber(k);
    return prod;
}

Polynomial pqGaussBinomial(unsigned n, long k) {
    if (k < 0 || k > long(n)) return Polynomial::zero();
    // Exact by construction; a remainder would falsify the classical fact
    // that Gaussian binomials are polynomials.
    return pqFactorial(n).divExact(pqFactorial(unsigned(n - k)) * pqFactorial(unsigned(k)));
}

Rational pqNumberAt(long n, const Rational& p, const Rational& q) {
    if (n == 0) return Rational(0);
    if (n < 0) return -ratPow(p * q, n) * pqNumberAt(-n, p, q);
    Rational sum(0);
    for (long k = 1; k <= n; ++k) sum += ratPow(p, n - k) * ratPow(q, k - 1);
    return sum;
}

Rational pqFactorialAt(unsigned n, const Rational& p, const Rational& q) {
    Rational prod(1);
    for (unsigned k = 1; k <= n; ++k) prod *= pqNumberAt(k, p, q);
    return prod;
}

RationalFunction qhBinomial(unsigned n, unsigned k, const RationalFunction& qhat,
                            const RationalFunction& hhat) {
    return qhBinomialF<RationalFunction>(n, k, qhat, hhat);
}

HParam hParam(int m, int s) {
    HParam result;
    result.m = m;
    result.s = s;
    if (m == 1) {
        result.value = RationalFunction::zero();  // [m-1] = [0] = 0
        return result;
    }
    if (s == 0)
        throw UndefinedParameter("h_{m,s} undefined for m != 1, s = 0 ([s] vanishes)");
    const Polynomial num = Polynomial::variable(Var::Q, s) * pqNumber(m - 1);
    const Polynomial den = pqNumber(s) * Polynomial::variable(Var::P, m - 1);
    result.value = RationalFunction(num, den);
    return result;
}

Rational hParamAt(int m, int s, const Rational& p, const Rational& q) {
    if (m == 1) return Rational(0);
    if (s == 0) throw UndefinedParameter("h_{m,s} undefined for m != 1, s = 0");
    const Rational den = pqNumberAt(s, p, q) * ratPow(p, m - 1);
    if (den == 0) throw EvaluationError("[s]_{p,q} vanishes at the evaluation point");
    return ratPow(q, s) * pqNumberAt(m - 1, p, q) / den;
}

}  // namespace pqcalc
