#include "pqcalc/touchard.hpp"

#include <cmath>
#include <functional>

namespace pqcalc {

TouchardPoly touchardSymbolic(unsigned n, int m) {
    TouchardPoly t;
    t.n = n;
    t.m = m;
    if (m == 0) {
        t.value = Polynomial::variable(Var::P, int(binom2(long(n))));
        return t;
    }
    Polynomial sum;
    for (unsigned k = 0; k <= n; ++k) {
        const Polynomial tilde = Polynomial::variable(Var::P, int(binom2(long(k))));
        sum += tilde * stirlingTouchard(n, k, m) *
               Polynomial::variable(Var::X, int(n) * (m - 1) + int(k));
    }
    t.value = sum;
    return t;
}

namespace {

long intBinomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    long result = 1;
    for (unsigned i = 0; i < k; ++i) result = result * long(n - i) / long(i + 1);
    return result;
}

void requireNumericDomain(double p, double q) {
    if (!(p > 0) || !(q > 0)) throw InvalidArgument("p and q must be positive");
    if (p == q) throw InvalidArgument("p != q is required");
    if (!(q < p)) throw InvalidArgument("numeric mode requires q < p (t = q/p in (0,1))");
}

// Main Touchard/Dobinski sum: sum_k p^{C(k,2)} (prod_{j<n} [k+j(m-1)]) x^{k+shift} / [k]!.
double mainSumReal(unsigned n, double m, double p, double q, double x, double shift,
                   const SumPolicy& policy) {
    const double t = q / p;
    if (std::abs(x) * std::pow(p, double(n)) >= 1.0 / (1.0 - t))
        throw NonConvergence("point outside the convergence domain of the Touchard series");

    double sum = 0.0;
    double maxAbs = 0.0;
    int quiet = 0;
    double pPow = 1.0;        // p^{C(k,2)}
    double factorial = 1.0;   // [k]_{p,q}!
    for (long k = 0; k < policy.maxTerms; ++k) {
        double product = 1.0;
        for (unsigned j = 0; j < n; ++j) product *= pqNumberReal(double(k) + j * (m - 1.0), p, q);
        const double term = pPow * product * std::pow(x, double(k) + shift) / factorial;
        sum += term;
        maxAbs = std::max(maxAbs, std::abs(term));
        if (maxAbs > 0 && std::abs(term) <= policy.tol * maxAbs) {
            if (++quiet >= policy.guardWindow) return sum;
        } else {
            quiet = 0;
        }
        if (!std::isfinite(term) || (maxAbs > 0 && std::abs(term) > maxAbs * 1e12))
            throw NonConvergence("Touchard series terms are diverging");
        pPow *= std::pow(p, double(k));
        factorial *= pqNumberReal(double(k) + 1.0, p, q);
    }
    throw NonConvergence("Touchard series did not converge within the term budget");
}

}  // namespace

double touchardNumeric(unsigned n, double m, double p, double q, double x,
                       const SumPolicy& policy) {
    requireNumericDomain(p, q);
    if (n == 0) return 1.0;  // E(-x) e(x) = 1
    if (x <= 0 && m != std::floor(m))
        throw InvalidArgument("non-integer order requires x > 0");
    const double shift = double(n) * (m - 1.0);
    const double sum = mainSumReal(n, m, p, q, x, shift, policy);
    return expUpperReal(p, q, -std::pow(p, double(n)) * x, policy) * sum;
}

double dobinski(unsigned n, double m, double p, double q, double x, double tol) {
    requireNumericDomain(p, q);
    if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
    if (n == 0) return 1.0;  // both series coincide
    if (x <= 0 && m != std::floor(m))
        throw InvalidArgument("non-integer order requires x > 0");
    SumPolicy policy;
    policy.tol = std::min(tol * 1e-2, 1e-15);
    const double sum = mainSumReal(n, m, p, q, x, 0.0, policy);
    return sum / expLowerReal(p, q, std::pow(p, double(n)) * x, policy);
}

Rational dobinskiExact(unsigned n, int m, const Rational& p, const Rational& q,
                       const Rational& x, const Rational& tol) {
    if (!(p > 0) || !(q > 0) || p == q || !(q < p))
        throw InvalidArgument("exact Dobinski mode requires 0 < q < p");
    if (!(tol > 0)) throw InvalidArgument("tolerance must be positive");
    if (n == 0) return Rational(1);
    // |p^n x| (p - q) < p  <=>  |p^n x| < 1/(1 - q/p).
    const Rational pn = ratPow(p, long(n));
    const Rational absx = x < 0 ? Rational(-x) : x;
    if (pn * absx * (p - q) >= p)
        throw NonConvergence("point outside the convergence domain of the Dobinski series");

    const auto sumSeries = [&](bool withBrackets) {
        Rational sum(0), maxAbs(0);
        Rational pPow(1), factorial(1), xPow(1);
        const Rational arg = withBrackets ? x : pn * x;
        int quiet = 0;
        for (long k = 0; k < 100000; ++k) {
            Rational term = pPow * xPow / factorial;
            if (withBrackets)
                for (unsigned j = 0; j < n; ++j)
                    term *= pqNumberAt(k + long(j) * (m - 1), p, q);
            sum += term;
            const Rational mag = term < 0 ? Rational(-term) : term;
            if (mag > maxAbs) maxAbs = mag;
            if (maxAbs > 0 && mag <= tol * maxAbs) {
                if (++quiet >= 5) return sum;
            } else {
                quiet = 0;
            }
            pPow *= ratPow(p, k);
            factorial *= pqNumberAt(k + 1, p, q);
            xPow *= arg;
        }
        throw NonConvergence("exact Dobinski series did not converge within the term budget");
    };

    const Rational numerator = sumSeries(true);
    const Rational denominator = sumSeries(false);
    if (denominator == 0) throw NonConvergence("e_{p,q}(p^n x) truncation vanished");
    return numerator / denominator;
}

TruncatedSeries touchardRecurrenceResidual(unsigned n, int m, int order) {
    if (m < 1) throw InvalidArgument("series-mode recurrence residual requires m >= 1");
    if (order < int(n + 1) * m)
        throw InvalidArgument("order must cover the degree of T^{(m)}_{n+1}");

    const Polynomial tn = touchardSymbolic(n, m).value;
    const Polynomial tn1 = touchardSymbolic(n + 1, m).value;

    const TruncatedSeries scaled = TruncatedSeries::fromPolynomial(tn, order).applyN();
    const TruncatedSeries derivative = TruncatedSeries::fromPolynomial(tn, order + 1).applyD();

    const Polynomial minusP = Polynomial(Rational(-1)) * Polynomial::variable(Var::P, int(n) + 1);
    const Polynomial pnq = Polynomial::variable(Var::P, int(n)) * Polynomial::variable(Var::Q);
    const TruncatedSeries ee = TruncatedSeries::expSeries(ExpKind::UpperE, order).scaleArgument(minusP) *
                               TruncatedSeries::expSeries(ExpKind::LowerE, order).scaleArgument(pnq);

    const TruncatedSeries rhs = (scaled + ee * derivative).shiftX(m);
    return TruncatedSeries::fromPolynomial(tn1, order) - rhs;
}

// ---------------------------------------------------------------------------

const char* verdictName(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::DiscrepancyDocumented: return "discrepancy-documented";
    }
    return "?";
}

const char* spiveyFormName(SpiveyForm f) {
    return f == SpiveyForm::LemmaDerived ? "lemma-derived" : "paper-display";
}

SpiveyReport spiveyClassical(unsigned n, unsigned l) {
    SpiveyReport report;
    report.identity = "spivey";
    report.mode = "symbolic-classical";
    report.n = n;
    report.l = l;
    report.m = 1;
    report.params["p"] = "1";
    report.params["q"] = "1";
    report.params["x"] = "symbolic";

    // LHS by enumeration: B_{n+l}(x) = sum_k S(n+l,k) x^k.
    Polynomial lhs;
    for (const auto& [k, count] : classicalStirlingRow(n + l))
        lhs += Polynomial(Monomial::var(Var::X, int(k)), Rational(count));

    const StirlingVariant classical = StirlingVariant::classical();
    const StirlingTable& table = cachedTable(classical, n + l);
    const Polynomial xvar = Polynomial::variable(Var::X);

    Polynomial rhs;
    for (unsigned k = 0; k <= n; ++k) {
        Polynomial bell;  // B_k(x) from the tables
        for (unsigned i = 0; i <= k; ++i)
            bell += table.entry(k, i) * xvar.pow(i);
        for (unsigned j = 0; j <= l; ++j) {
            // j^{n-k} with 0^0 = 1 realizes the delta-limit convention.
            Rational power = ratPow(Rational(long(j)), long(n - k));
            if (power == 0) continue;
            rhs += Rational(intBinomial(n, k)) * power * table.entry(l, j) * xvar.pow(j) * bell;
        }
    }

    const Polynomial residual = lhs - rhs;
    report.lhs = lhs.str();
    report.rhs = rhs.str();
    report.residual = residual.str();
    report.residualZero = residual.isZero();
    report.verdict = report.residualZero ? Verdict::Pass : Verdict::Fail;
    return report;
}

SpiveyReport spiveyRationalPoint(unsigned n, unsigned l, int m, SpiveyForm form,
                                 const Rational& p, const Rational& q, const Rational& x) {
    if (m == 0) throw InvalidArgument("Spivey check requires m != 0");
    if (p == q) throw InvalidArgument("rational-point mode requires p != q");

    SpiveyReport report;
    report.identity = "spivey";
    report.mode = form == SpiveyForm::PaperDisplay ? "audit" : "rational-point";
    report.form = form;
    report.n = n;
    report.l = l;
    report.m = m;
    report.params["p"] = ratToString(p);
    report.params["q"] = ratToString(q);
    report.params["x"] = ratToString(x);

    const std::map<Var, Rational> point{{Var::P, p}, {Var::Q, q}};

    // Tilde Stirling entries at the point; tables on the right, the operator
    // oracle on the left.
    const auto tildeAt = [&](unsigned nn, unsigned kk) {
        return ratPow(p, binom2(long(kk))) * stirlingTouchard(nn, kk, m).evaluate(point);
    };
    const auto bellAt = [&](unsigned kk, const Rational& arg) {
        Rational sum(0);
        for (unsigned i = 0; i <= kk; ++i) sum += tildeAt(kk, i) * ratPow(arg, long(i));
        return sum;
    };

    const std::vector<Polynomial> oracle = extractStirling(n + l, m);
    Rational lhs(0);
    for (unsigned k = 0; k <= n + l; ++k)
        lhs += ratPow(p, binom2(long(k))) * oracle[k].evaluate(point) * ratPow(x, long(k));

    const Rational qhat = ratPow(q / p, m - 1);
    Rational rhs(0);
    for (unsigned j = 0; j <= l; ++j) {
        const long sj = long(j) + long(l) * (m - 1);
        const Rational tildeLj = tildeAt(l, j);
        if (tildeLj == 0) continue;
        if (sj == 0) {
            // [s_j] = 0 makes S = [s_j] X^{m-1} N_p the zero operator, so only
            // the k = n term of (R+S)^n survives, with unit coefficient.
            rhs += ratPow(p, long(m - 1) * long(n) * long(l)) * tildeLj * ratPow(x, long(j)) *
                   bellAt(n, ratPow(p, long(l)) * x);
            continue;
        }
        const Rational bracketSj = pqNumberAt(sj, p, q);
        const Rational hhat = hParamAt(m, int(sj), p, q);
        for (unsigned k = 0; k <= n; ++k) {
            const Rational gamma = qhBinomialF<Rational>(n, n - k, qhat, hhat);
            Rational term = gamma *
                            ratPow(p, long(m - 1) * (long(n - k) * long(1 + k) + long(k) * long(l))) *
                            ratPow(q, long(k) * sj) * tildeLj * ratPow(x, long(j)) *
                            bellAt(k, ratPow(p, long(n + l - k)) * x);
            if (form == SpiveyForm::LemmaDerived) term *= ratPow(bracketSj, long(n - k));
            rhs += term;
        }
    }

    const Rational residual = lhs - rhs;
    report.lhs = ratToString(lhs);
    report.rhs = ratToString(rhs);
    report.residual = ratToString(residual);
    report.residualZero = residual == 0;
    if (report.residualZero)
        report.verdict = Verdict::Pass;
    else
        report.verdict =
            form == SpiveyForm::PaperDisplay ? Verdict::DiscrepancyDocumented : Verdict::Fail;
    return report;
}

SpiveyReport spiveyM1(unsigned n, unsigned mm) {
    SpiveyReport report;
    report.identity = "spivey-m1";
    report.mode = "symbolic";
    report.n = n;
    report.l = mm;
    report.m = 1;

    // LHS from the oracle: B~_{n+mm}(p,q;1) = sum_k p^{C(k,2)} S_{p,q}(n+mm,k).
    const std::vector<Polynomial> oracle = extractStirling(n + mm, 1);
    Polynomial lhs;
    for (unsigned k = 0; k < oracle.size(); ++k)
        lhs += Polynomial::variable(Var::P, int(binom2(long(k)))) * oracle[k];

    const StirlingVariant pq = StirlingVariant::pq();
    const StirlingTable& table = cachedTable(pq, n + mm);

    Polynomial rhs;
    for (unsigned k = 0; k <= n; ++k) {
        const Polynomial sk = table.entry(n, k);
        if (sk.isZero()) continue;
        for (unsigned j = 0; j <= mm; ++j) {
            // B~_j(p,q;p^{n+mm-j}) = sum_i p^{C(i,2)} S_{p,q}(j,i) p^{(n+mm-j)i}.
            Polynomial bell;
            for (unsigned i = 0; i <= j; ++i)
                bell += Polynomial::variable(
                            Var::P, int(binom2(long(i))) + int(n + mm - j) * int(i)) *
                        table.entry(j, i);
            rhs += Polynomial::variable(Var::P, int(binom2(long(k)))) *
                   pqNumber(long(k)).pow(mm - j) *
                   Polynomial::variable(Var::Q, int(j) * int(k)) * sk *
                   Polynomial(Rational(intBinomial(mm, j))) * bell;
        }
    }

    const Polynomial residual = lhs - rhs;
    report.lhs = lhs.str();
    report.rhs = rhs.str();
    report.residual = residual.str();
    report.residualZero = residual.isZero();
    report.verdict = report.residualZero ? Verdict::Pass : Verdict::Fail;
    return report;
}

SpiveyReport spiveySides(unsigned n, unsigned l, int m, SpiveyForm form,
                         const std::optional<RationalPoint>& point) {
    if (!point) {
        if (m != 1) throw InvalidArgument("symbolic mode is the classical reduction; requires m = 1");
        return spiveyClassical(n, l);
    }
    return spiveyRationalPoint(n, l, m, form, point->p, point->q, point->x);
}

}  // namespace pqcalc
