#pragma once

#include <optional>

#include "pqcalc/numeric.hpp"
#include "pqcalc/operator_algebra.hpp"
#include "pqcalc/stirling.hpp"

namespace pqcalc {

// T^{(m)}_{n;p,q}(x) = x^{n(m-1)} sum_k p^{C(k,2)} S^{(m)}(n,k) x^k; a Laurent
// polynomial in x for negative m.
struct TouchardPoly {
    unsigned n = 0;
    int m = 1;
    Polynomial value;
};

// Symbolic Touchard polynomial of integer order; m = 0 gives the constant
// p^{C(n,2)}.
TouchardPoly touchardSymbolic(unsigned n, int m);

// E_{p,q}(-p^n x) (X^m D)^n e_{p,q}(x) evaluated termwise for real order m;
// agrees with the symbolic value at integer m. Requires q < p (both positive)
// and |x| p^n < 1/(1 - q/p).
double touchardNumeric(unsigned n, double m, double p, double q, double x,
                       const SumPolicy& policy = {});

// Coefficients of T^{(m)}_{n+1}(x) - x^m (N_p + E_{p,q}(-p^{n+1}x)
// e_{p,q}(p^n q x) D_{p,q}) T^{(m)}_n(x) in truncated-series arithmetic; the
// identity holds iff every returned coefficient is zero. Series mode requires
// m >= 1 and order >= (n+1)m.
TruncatedSeries touchardRecurrenceResidual(unsigned n, int m, int order);

// Dobinski quotient (1/e_{p,q}(p^n x)) sum_k (prod_j [k+j(m-1)]) / [k]! *
// p^{C(k,2)} x^k with both series truncated adaptively to the given relative
// tolerance.
double dobinski(unsigned n, double m, double p, double q, double x, double tol);

// Exact-rational Dobinski summation for integer order; every partial sum is
// exact, only the truncation point depends on tol.
Rational dobinskiExact(unsigned n, int m, const Rational& p, const Rational& q,
                       const Rational& x, const Rational& tol);

// ---------------------------------------------------------------------------
// Spivey relation

enum class SpiveyForm {
    LemmaDerived,  // restores the bracket power [j+l(m-1)]^{n-k}
    PaperDisplay,  // the displayed main theorem, bracket power omitted
};

enum class Verdict { Pass, Fail, DiscrepancyDocumented };

const char* verdictName(Verdict v);
const char* spiveyFormName(SpiveyForm f);

struct SpiveyReport {
    std::string identity;  // "spivey" or "spivey-m1"
    std::string mode;      // "symbolic-classical" | "rational-point" | "audit"
    SpiveyForm form = SpiveyForm::LemmaDerived;
    unsigned n = 0;
    unsigned l = 0;
    int m = 1;
    std::map<std::string, std::string> params;
    std::string lhs;
    std::string rhs;
    std::string residual;
    bool residualZero = false;
    Verdict verdict = Verdict::Fail;
};

// Classical reduction (p = q = 1, m = 1) with symbolic x: the left side comes
// from set-partition enumeration, the right side from the recurrence tables.
SpiveyReport spiveyClassical(unsigned n, unsigned l);

// Exact rational point check. The left side is the oracle Bell polynomial
// built from the normal-ordering coefficients of (X^m D)^{n+l}; the right
// side is the double sum with recurrence-table Stirling numbers. With
// form = PaperDisplay a nonzero residual is reported as
// DiscrepancyDocumented rather than Fail.
SpiveyReport spiveyRationalPoint(unsigned n, unsigned l, int m, SpiveyForm form,
                                 const Rational& p, const Rational& q, const Rational& x);

// The m = 1 specialization, fully symbolic in p and q:
// B~_{n+mm}(p,q;1) = sum_{k,j} p^{C(k,2)} [k]^{mm-j} q^{jk} S_{p,q}(n,k)
//                    C(mm,j) B~_j(p,q;p^{n+mm-j}).
// The left side uses the operator oracle, the right side the tables.
SpiveyReport spiveyM1(unsigned n, unsigned mm);

struct RationalPoint {
    Rational p, q, x;
};

// Dispatcher matching the verification surface: symbolic-classical when no
// point is given, rational-point / audit otherwise.
SpiveyReport spiveySides(unsigned n, unsigned l, int m, SpiveyForm form,
                         const std::optional<RationalPoint>& point);

}  // namespace pqcalc
