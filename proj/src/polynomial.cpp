#include "pqcalc/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace pqcalc {

const char* varName(Var v) {
    switch (v) {
        case Var::P: return "p";
        case Var::Q: return "q";
        case Var::H: return "h";
        case Var::X: return "x";
    }
    throw InvalidArgument("bad variable");
}

Var parseVar(char c) {
    switch (c) {
        case 'p': return Var::P;
        case 'q': return Var::Q;
        case 'h': return Var::H;
        case 'x': return Var::X;
    }
    throw InvalidArgument(std::string("unknown variable: ") + c);
}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
    if (c != 0) terms_.emplace(m, c);
}

Polynomial Polynomial::variable(Var v, int exponent) {
    if (exponent == 0) return one();
    return Polynomial(Monomial::var(v, exponent), Rational(1));
}

const Polynomial& Polynomial::zero() {
    static const Polynomial z;
    return z;
}

const Polynomial& Polynomial::one() {
    static const Polynomial o{Rational(1)};
    return o;
}

bool Polynomial::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isConstant());
}

std::optional<Rational> Polynomial::asConstant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.isConstant()) return terms_.begin()->second;
    return std::nullopt;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::addTerm(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.addTerm(ma * mb, ca * cb);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& f) { return f * c; }

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result = one();
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1u) result *= base;
        n >>= 1u;
        if (n > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::substitutePower(Var v, int m) const {
    if (m == 0) throw InvalidArgument("substitutePower requires a nonzero power");
    Polynomial r;
    for (const auto& [mono, c] : terms_) {
        Monomial scaled = mono;
        scaled.setExponent(v, mono.exponent(v) * m);
        r.addTerm(scaled, c);
    }
    return r;
}

Polynomial Polynomial::substituteValue(Var v, const Rational& value) const {
    Polynomial r;
    for (const auto& [mono, c] : terms_) {
        const int e = mono.exponent(v);
        Monomial rest = mono;
        rest.setExponent(v, 0);
        r.addTerm(rest, c * ratPow(value, e));
    }
    return r;
}

Polynomial Polynomial::dilate(Var v, const Monomial& scale) const {
    if (scale.exponent(v) != 0) throw InvalidArgument("dilation scale must not involve the dilated variable");
    Polynomial r;
    for (const auto& [mono, c] : terms_) r.addTerm(mono * scale.pow(mono.exponent(v)), c);
    return r;
}

Polynomial Polynomial::swapVars(Var a, Var b) const {
    Polynomial r;
    for (const auto& [mono, c] : terms_) {
        Monomial m = mono;
        const int ea = m.exponent(a), eb = m.exponent(b);
        m.setExponent(a, eb);
        m.setExponent(b, ea);
        r.addTerm(m, c);
    }
    return r;
}

Rational Polynomial::evaluate(const std::map<Var, Rational>& point) const {
    Rational sum(0);
    for (const auto& [mono, c] : terms_) {
        Rational term = c;
        for (Var v : kAllVars) {
            const int e = mono.exponent(v);
            if (e == 0) continue;
            auto it = point.find(v);
            if (it == point.end())
                throw EvaluationError(std::string("unassigned variable: ") + varName(v));
            term *= ratPow(it->second, e);
        }
        sum += term;
    }
    return sum;
}

namespace {

// Largest-exponent monomial shift making every exponent of f nonnegative with
// minimum 0 in each occurring variable.
Monomial contentShift(const Polynomial& f) {
    Monomial shift;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        (void)c;
        if (first) {
            shift = m;
            first = false;
            continue;
        }
        for (Var v : kAllVars)
            shift.setExponent(v, std::min(shift.exponent(v), m.exponent(v)));
    }
    return shift;
}

bool monomialDivides(const Monomial& a, const Monomial& b) {
    // a | b componentwise (proper polynomial ring).
    for (Var v : kAllVars)
        if (b.exponent(v) < a.exponent(v)) return false;
    return true;
}

}  // namespace

Polynomial Polynomial::divExact(const Polynomial& b) const {
    if (b.isZero()) throw InvalidArgument("division by the zero polynomial");
    if (isZero()) return zero();

    // Reduce to the proper polynomial ring: in a domain, Laurent divisibility
    // is equivalent to divisibility of the monomial-content-stripped parts.
    const Monomial sa = contentShift(*this), sb = contentShift(b);
    Polynomial a = *this * Polynomial(sa.inverse(), Rational(1));
    Polynomial d = b * Polynomial(sb.inverse(), Rational(1));

    // Single-divisor reduction under graded lex. If d | a, every intermediate
    // remainder is still a multiple of d, so its leading term stays divisible
    // by lead(d); the first failure therefore proves non-divisibility.
    Polynomial quotient;
    const auto& leadD = *d.terms().rbegin();
    while (!a.isZero()) {
        const auto& leadA = *a.terms().rbegin();
        if (!monomialDivides(leadD.first, leadA.first))
            throw NotDivisible("polynomial division leaves a remainder");
        const Monomial m = leadA.first * leadD.first.inverse();
        const Rational c = leadA.second / leadD.second;
        const Polynomial t(m, c);
        quotient += t;
        a -= t * d;
    }
    return quotient * Polynomial(sa * sb.inverse(), Rational(1));
}

bool Polynomial::dependsOn(Var v) const {
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (m.exponent(v) != 0) return true;
    }
    return false;
}

int Polynomial::minExponent(Var v) const {
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (first || m.exponent(v) < best) best = m.exponent(v);
        first = false;
    }
    return best;
}

int Polynomial::maxExponent(Var v) const {
    int best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (first || m.exponent(v) > best) best = m.exponent(v);
        first = false;
    }
    return best;
}

long Polynomial::maxTotalDegree() const {
    long best = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (first || m.totalDegree() > best) best = m.totalDegree();
        first = false;
    }
    return best;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Descending graded lex reads like handwritten polynomials.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;

        std::string vars;
        for (Var v : kAllVars) {
            const int e = m.exponent(v);
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += varName(v);
            if (e != 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out << ratToString(mag);
        } else {
            if (mag != 1) out << ratToString(mag) << "*";
            out << vars;
        }
    }
    return out.str();
}

}  // namespace pqcalc
