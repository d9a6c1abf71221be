#include "pqcalc/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace pqcalc {

namespace {

void requirePositiveBases(double p, double q) {
    if (!(p > 0) || !(q > 0)) throw InvalidArgument("p and q must be positive");
}

void requireProperRatio(double p, double q) {
    requirePositiveBases(p, q);
    const double t = q / p;
    if (!(t > 0) || !(t < 1))
        throw InvalidArgument("numeric kernels require t = q/p in (0,1)");
}

}  // namespace

double pqNumberReal(double a, double p, double q) {
    requirePositiveBases(p, q);
    if (p == q) throw InvalidArgument("pqNumberReal requires p != q");
    return (std::pow(p, a) - std::pow(q, a)) / (p - q);
}

double pqFactorialReal(unsigned n, double p, double q) {
    double prod = 1.0;
    for (unsigned k = 1; k <= n; ++k) prod *= pqNumberReal(double(k), p, q);
    return prod;
}

namespace {

// Sums term_0 + term_1 + ... where nextRatio(k) = term_{k+1}/term_k.
double adaptiveSum(double term0, const SumPolicy& policy,
                   const std::function<double(long)>& nextRatio) {
    double sum = 0.0;
    double term = term0;
    double maxAbs = std::abs(term0);
    int quiet = 0;
    for (long k = 0; k < policy.maxTerms; ++k) {
        sum += term;
        maxAbs = std::max(maxAbs, std::abs(term));
        if (std::abs(term) <= policy.tol * maxAbs) {
            if (++quiet >= policy.guardWindow) return sum;
        } else {
            quiet = 0;
        }
        if (!std::isfinite(term) || std::abs(term) > maxAbs * 1e12)
            throw NonConvergence("series terms are diverging");
        term *= nextRatio(k);
    }
    throw NonConvergence("series did not converge within the term budget");
}

}  // namespace

double expLowerReal(double p, double q, double x, const SumPolicy& policy) {
    requireProperRatio(p, q);
    const double t = q / p;
    if (std::abs(x) >= 1.0 / (1.0 - t))
        throw NonConvergence("argument outside the radius of the lower (p,q)-exponential");
    // e_{p,q}(x) = sum x^k / [k]_t!; ratio of consecutive terms x/[k+1]_t.
    return adaptiveSum(1.0, policy, [&](long k) {
        const double bracket = (1.0 - std::pow(t, double(k + 1))) / (1.0 - t);
        return x / bracket;
    });
}

double expUpperReal(double p, double q, double x, const SumPolicy& policy) {
    requireProperRatio(p, q);
    const double t = q / p;
    // E_{p,q}(x) = sum t^{C(k,2)} x^k / [k]_t!; ratio t^k x/[k+1]_t.
    return adaptiveSum(1.0, policy, [&](long k) {
        const double bracket = (1.0 - std::pow(t, double(k + 1))) / (1.0 - t);
        return std::pow(t, double(k)) * x / bracket;
    });
}

}  // namespace pqcalc
