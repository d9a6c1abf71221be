#include "pqcalc/operator_algebra.hpp"

namespace pqcalc {

OperatorExpr OperatorExpr::identity() { return term(NormalTerm{0, 0, 0}); }

OperatorExpr OperatorExpr::term(NormalTerm t, Polynomial coeff) {
    OperatorExpr e;
    e.add(t, coeff);
    return e;
}

Polynomial OperatorExpr::coeff(const NormalTerm& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Polynomial::zero() : it->second;
}

void OperatorExpr::add(const NormalTerm& t, const Polynomial& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

OperatorExpr OperatorExpr::operator+(const OperatorExpr& o) const {
    OperatorExpr r = *this;
    for (const auto& [t, c] : o.terms_) r.add(t, c);
    return r;
}

OperatorExpr OperatorExpr::operator-(const OperatorExpr& o) const {
    OperatorExpr r = *this;
    for (const auto& [t, c] : o.terms_) r.add(t, -c);
    return r;
}

OperatorExpr OperatorExpr::scale(const Polynomial& c) const {
    OperatorExpr r;
    if (c.isZero()) return r;
    for (const auto& [t, coef] : terms_) r.add(t, coef * c);
    return r;
}

const OperatorAlgebra& OperatorAlgebra::concrete() {
    static const OperatorAlgebra a{0, Polynomial::one()};
    return a;
}

OperatorExpr OperatorAlgebra::leftMulU(const NormalTerm& t, const Polynomial& c) const {
    // U V^a W^n U^d = q^a p^n V^a W^n U^{d+1} + h [a] V^{a+s-1} W^{n+1} U^d.
    OperatorExpr r;
    const Polynomial qa = Polynomial::variable(Var::Q, t.x) * Polynomial::variable(Var::P, t.n);
    r.add(NormalTerm{t.x, t.n, t.d + 1}, c * qa);
    const Polynomial bracket = pqNumber(t.x);
    if (!bracket.isZero()) r.add(NormalTerm{t.x + s_ - 1, t.n + 1, t.d}, c * h_ * bracket);
    return r;
}

OperatorExpr OperatorAlgebra::mulTerms(const NormalTerm& a, const NormalTerm& b) const {
    // (V^{a.x} W^{a.n} U^{a.d}) (V^{b.x} W^{b.n} U^{b.d}):
    // push the U^{a.d} block through V^{b.x} one U at a time, then commute the
    // remaining W/U blocks past powers with the homogeneous p-rules.
    OperatorExpr middle = OperatorExpr::term(NormalTerm{b.x, 0, 0});
    for (int i = 0; i < a.d; ++i) {
        OperatorExpr next;
        for (const auto& [t, c] : middle.terms()) {
            const OperatorExpr piece = leftMulU(t, c);
            for (const auto& [t2, c2] : piece.terms()) next.add(t2, c2);
        }
        middle = std::move(next);
    }
    OperatorExpr result;
    for (const auto& [t, c] : middle.terms()) {
        // W^{a.n} past V^{t.x} and U^{t.d} past W^{b.n}.
        const Polynomial commute = Polynomial::variable(Var::P, a.n * t.x + t.d * b.n);
        result.add(NormalTerm{a.x + t.x, a.n + t.n + b.n, t.d + b.d}, c * commute);
    }
    return result;
}

OperatorExpr OperatorAlgebra::mul(const OperatorExpr& a, const OperatorExpr& b) const {
    OperatorExpr r;
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms()) {
            const OperatorExpr prod = mulTerms(ta, tb);
            const Polynomial c = ca * cb;
            for (const auto& [t, coef] : prod.terms()) r.add(t, coef * c);
        }
    return r;
}

OperatorExpr OperatorAlgebra::pow(const OperatorExpr& a, unsigned n) const {
    OperatorExpr result = OperatorExpr::identity();
    for (unsigned i = 0; i < n; ++i) result = mul(result, a);
    return result;
}

Polynomial applyToPoly(const OperatorExpr& a, const Polynomial& f) {
    Polynomial result;
    for (const auto& [t, c] : a.terms()) {
        for (const auto& [mono, fc] : f.terms()) {
            const int k = mono.x;
            // D^d first: product of brackets [k][k-1]...[k-d+1], exponent k-d.
            Polynomial factor = Polynomial::one();
            for (int i = 0; i < t.d; ++i) {
                factor *= pqNumber(k - i);
                if (factor.isZero()) break;
            }
            if (factor.isZero()) continue;
            // then N^n: p^{n (k-d)}; then X^x.
            factor *= Polynomial::variable(Var::P, t.n * (k - t.d));
            Monomial rest = mono;
            rest.x = 0;
            result += c * factor * Polynomial(rest, fc) *
                      Polynomial::variable(Var::X, k - t.d + t.x);
        }
    }
    return result;
}

TruncatedSeries applyToSeries(const OperatorExpr& a, const TruncatedSeries& f, int resultOrder) {
    TruncatedSeries result(resultOrder);
    for (const auto& [t, c] : a.terms()) {
        for (int r = 0; r <= resultOrder; ++r) {
            const int k = r - t.x + t.d;  // input exponent feeding x^r
            if (k < 0) continue;
            if (k > f.order())
                throw InvalidArgument("series order too small for the requested operator action");
            const RationalFunction& in = f.coeff(k);
            if (in.isZero()) continue;
            Polynomial factor = Polynomial::one();
            for (int i = 0; i < t.d; ++i) {
                factor *= pqNumber(k - i);
                if (factor.isZero()) break;
            }
            if (factor.isZero()) continue;
            factor *= Polynomial::variable(Var::P, t.n * (k - t.d));
            result.setCoeff(r, result.coeff(r) + in * RationalFunction(c * factor));
        }
    }
    return result;
}

std::vector<Polynomial> abstractPowerVu(unsigned n, int s, const Polynomial& h) {
    const OperatorAlgebra algebra(s, h);
    const OperatorExpr vu = OperatorExpr::term(NormalTerm{1, 0, 1});
    const OperatorExpr power = algebra.pow(vu, n);

    std::vector<Polynomial> coeffs(n + 1, Polynomial::zero());
    for (const auto& [t, c] : power.terms()) {
        bool matched = false;
        for (unsigned k = 0; k <= n; ++k) {
            if (t.d == int(k) && t.n == int(n - k) && t.x == s * int(n - k) + int(k)) {
                coeffs[k] = c;
                matched = true;
                break;
            }
        }
        if (!matched)
            throw InternalInconsistency("(VU)^n produced a term outside the predicted support");
    }
    return coeffs;
}

std::vector<Polynomial> extractStirling(unsigned n, int m) {
    if (m == 0) throw InvalidArgument("extractStirling requires m != 0");
    const OperatorExpr base = OperatorExpr::term(NormalTerm{m, 0, 1});
    const OperatorExpr power = OperatorAlgebra::concrete().pow(base, n);

    std::vector<Polynomial> coeffs(n + 1, Polynomial::zero());
    for (const auto& [t, c] : power.terms()) {
        // Predicted support: X^{n(m-1)+k} N^{n-k} D^k.
        const int k = t.d;
        if (k < 0 || k > int(n) || t.n != int(n) - k || t.x != int(n) * (m - 1) + k)
            throw InternalInconsistency("(X^m D)^n produced a term outside the predicted support");
        coeffs[std::size_t(k)] = c;
    }
    return coeffs;
}

OperatorExpr ncBinomialExpand(const OperatorExpr& r, const OperatorExpr& s, unsigned n) {
    return OperatorAlgebra::concrete().pow(r + s, n);
}

}  // namespace pqcalc
