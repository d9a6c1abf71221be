#include "pqcalc/series.hpp"

namespace pqcalc {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw InvalidArgument("series order must be >= 0");
    coeffs_.assign(std::size_t(order) + 1, RationalFunction::zero());
}

TruncatedSeries TruncatedSeries::expSeries(ExpKind kind, int order) {
    TruncatedSeries s(order);
    const Var sigma = kind == ExpKind::LowerE ? Var::P : Var::Q;
    // Shared denominator [order]!; numerator of coeff k is sigma^C(k,2) * [order]!/[k]!.
    const Polynomial fullFactorial = pqFactorial(unsigned(order));
    Polynomial cofactor = Polynomial::one();  // [order]!/[k]! built downward
    std::vector<Polynomial> cofactors(std::size_t(order) + 1);
    for (int k = order; k >= 0; --k) {
        cofactors[std::size_t(k)] = cofactor;
        if (k > 0) cofactor *= pqNumber(k);
    }
    for (int k = 0; k <= order; ++k) {
        const Polynomial num =
            Polynomial::variable(sigma, int(binom2(k))) * cofactors[std::size_t(k)];
        s.coeffs_[std::size_t(k)] = RationalFunction(num, fullFactorial);
    }
    return s;
}

TruncatedSeries TruncatedSeries::fromPolynomial(const Polynomial& f, int order) {
    TruncatedSeries s(order);
    for (const auto& [m, c] : f.terms()) {
        if (m.x < 0) throw InvalidArgument("polynomial with negative x-exponent is not a power series");
        if (m.x > order) continue;
        Monomial rest = m;
        rest.x = 0;
        s.coeffs_[std::size_t(m.x)] += RationalFunction(Polynomial(rest, c));
    }
    return s;
}

const RationalFunction& TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order()) throw InvalidArgument("series coefficient index out of range");
    return coeffs_[std::size_t(k)];
}

void TruncatedSeries::setCoeff(int k, RationalFunction c) {
    if (k < 0 || k > order()) throw InvalidArgument("series coefficient index out of range");
    coeffs_[std::size_t(k)] = std::move(c);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries r(std::min(order(), o.order()));
    for (int k = 0; k <= r.order(); ++k) r.coeffs_[std::size_t(k)] = coeff(k) + o.coeff(k);
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    TruncatedSeries r(std::min(order(), o.order()));
    for (int k = 0; k <= r.order(); ++k) r.coeffs_[std::size_t(k)] = coeff(k) - o.coeff(k);
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    TruncatedSeries r(std::min(order(), o.order()));
    for (int k = 0; k <= r.order(); ++k) {
        RationalFunction sum;
        for (int i = 0; i <= k; ++i) {
            const RationalFunction& a = coeffs_[std::size_t(i)];
            const RationalFunction& b = o.coeffs_[std::size_t(k - i)];
            if (a.isZero() || b.isZero()) continue;
            sum += a * b;
        }
        r.coeffs_[std::size_t(k)] = std::move(sum);
    }
    return r;
}

TruncatedSeries TruncatedSeries::scale(const RationalFunction& c) const {
    TruncatedSeries r(order());
    for (int k = 0; k <= order(); ++k) r.coeffs_[std::size_t(k)] = coeff(k) * c;
    return r;
}

TruncatedSeries TruncatedSeries::scaleArgument(const Polynomial& c) const {
    if (c.dependsOn(Var::X)) throw InvalidArgument("argument scale must be x-free");
    TruncatedSeries r(order());
    Polynomial power = Polynomial::one();
    for (int k = 0; k <= order(); ++k) {
        r.coeffs_[std::size_t(k)] = coeff(k) * RationalFunction(power);
        if (k < order()) power *= c;
    }
    return r;
}

TruncatedSeries TruncatedSeries::applyN() const { return scaleArgument(Polynomial::variable(Var::P)); }

TruncatedSeries TruncatedSeries::applyD() const {
    if (order() == 0) throw InvalidArgument("cannot differentiate an order-0 series");
    TruncatedSeries r(order() - 1);
    for (int k = 0; k + 1 <= order(); ++k)
        r.coeffs_[std::size_t(k)] = coeff(k + 1) * RationalFunction(pqNumber(k + 1));
    return r;
}

TruncatedSeries TruncatedSeries::shiftX(int m) const {
    TruncatedSeries r(order());
    for (int k = 0; k <= order(); ++k) {
        const int target = k + m;
        if (target > order()) continue;
        if (target < 0) {
            if (!coeff(k).isZero())
                throw InvalidArgument("x-shift pushes a nonzero coefficient below x^0");
            continue;
        }
        r.coeffs_[std::size_t(target)] = coeff(k);
    }
    return r;
}

TruncatedSeries TruncatedSeries::truncate(int order) const {
    TruncatedSeries r(std::min(order, this->order()));
    for (int k = 0; k <= r.order(); ++k) r.coeffs_[std::size_t(k)] = coeff(k);
    return r;
}

bool TruncatedSeries::isZero() const {
    for (const auto& c : coeffs_)
        if (!c.isZero()) return false;
    return true;
}

bool TruncatedSeries::equalThrough(const TruncatedSeries& o, int order) const {
    for (int k = 0; k <= order; ++k)
        if (!(coeff(k) == o.coeff(k))) return false;
    return true;
}

}  // namespace pqcalc
