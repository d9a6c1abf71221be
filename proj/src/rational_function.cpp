#include "pqcalc/rational_function.hpp"

#include <algorithm>

namespace pqcalc {

RationalFunction::RationalFunction(Polynomial n, Polynomial d)
    : num_(std::move(n)), den_(std::move(d)) {
    normalize();
}

void RationalFunction::normalize() {
    if (den_.isZero()) throw InvalidArgument("rational function with zero denominator");
    if (num_.isZero()) {
        den_ = Polynomial::one();
        return;
    }
    // Strip the common monomial content of numerator and denominator, then
    // scale so the denominator's graded-lex leading coefficient is 1. This is
    // cheap and keeps denominators from accumulating monomial factors across
    // long computations; full GCD reduction is deliberately not attempted.
    Monomial shift;
    bool first = true;
    for (const Polynomial* f : {&num_, &den_})
        for (const auto& [m, c] : f->terms()) {
            (void)c;
            if (first) {
                shift = m;
                first = false;
                continue;
            }
            for (Var v : kAllVars) shift.setExponent(v, std::min(shift.exponent(v), m.exponent(v)));
        }
    if (!shift.isConstant()) {
        const Polynomial unshift(shift.inverse(), Rational(1));
        num_ = num_ * unshift;
        den_ = den_ * unshift;
    }
    const Rational lead = den_.terms().rbegin()->second;
    if (lead != 1) {
        const Rational inv = Rational(1) / lead;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

const RationalFunction& RationalFunction::zero() {
    static const RationalFunction z;
    return z;
}

const RationalFunction& RationalFunction::one() {
    static const RationalFunction o{Rational(1)};
    return o;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    // Common fast paths keep the shared-denominator shape produced by the
    // exponential series constructors instead of blowing up via cross
    // multiplication.
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    if (o.den_ == Polynomial::one()) return RationalFunction(num_ + o.num_ * den_, den_);
    if (den_ == Polynomial::one()) return RationalFunction(num_ * o.den_ + o.num_, o.den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (num_.isZero() || o.num_.isZero()) return zero();
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.isZero()) throw InvalidArgument("division by the zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) { return *this = *this + o; }
RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this = *this - o; }
RationalFunction& RationalFunction::operator*=(const RationalFunction& o) { return *this = *this * o; }

RationalFunction RationalFunction::pow(int n) const {
    if (n == 0) return one();
    if (n < 0) {
        if (isZero()) throw InvalidArgument("zero rational function raised to a negative power");
        return RationalFunction(den_.pow(unsigned(-n)), num_.pow(unsigned(-n)));
    }
    return RationalFunction(num_.pow(unsigned(n)), den_.pow(unsigned(n)));
}

bool RationalFunction::equals(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

Rational RationalFunction::evaluate(const std::map<Var, Rational>& point) const {
    const Rational d = den_.evaluate(point);
    if (d == 0) throw EvaluationError("denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

std::string RationalFunction::str() const {
    if (den_ == Polynomial::one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RationalFunction operator*(const Polynomial& f, const RationalFunction& r) {
    return RationalFunction(f) * r;
}

}  // namespace pqcalc
