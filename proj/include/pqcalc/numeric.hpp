#pragma once

#include "pqcalc/rational.hpp"

namespace pqcalc {

// Adaptive summation policy for the deformed exponential / Dobinski series.
// A sum stops once `guardWindow` consecutive terms each fall below
// tol * (largest |term| seen); growth past the guard budget raises
// NonConvergence.
struct SumPolicy {
    double tol = 1e-15;
    int guardWindow = 5;
    int maxTerms = 200000;
};

// [a]_{p,q} = (p^a - q^a)/(p - q) for real argument a; requires p, q > 0 and
// p != q.
double pqNumberReal(double a, double p, double q);

double pqFactorialReal(unsigned n, double p, double q);

// e_{p,q}(x) = sum_k p^{C(k,2)} x^k / [k]_{p,q}!. Writing t = q/p turns this
// into the base-t q-exponential, so the domain requirement is t in (0,1) and
// |x| < 1/(1-t).
double expLowerReal(double p, double q, double x, const SumPolicy& policy = {});

// E_{p,q}(x) = sum_k q^{C(k,2)} x^k / [k]_{p,q}!; entire for t = q/p in (0,1).
double expUpperReal(double p, double q, double x, const SumPolicy& policy = {});

}  // namespace pqcalc
