#include "pqcalc/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace pqcalc {

namespace {

// cpp_rational's two-argument constructor rejects negative denominators.
Rational makeRational(Int num, Int den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

}  // namespace

Rational ratPow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw EvaluationError("zero base raised to a negative power");
        return Rational(0);
    }
    const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    Int num = pow(numerator(base), mag);
    Int den = pow(denominator(base), mag);
    return e > 0 ? makeRational(num, den) : makeRational(den, num);
}

long binom2(long n) {
    if (n < 0) throw InvalidArgument("binom2 requires n >= 0");
    return n * (n - 1) / 2;
}

std::string ratToString(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parseRational(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw InvalidArgument("empty rational literal");

    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        try {
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            if (den == 0) throw InvalidArgument("zero denominator in rational literal: " + s);
            return makeRational(num, den);
        } catch (const std::exception&) {
            throw InvalidArgument("malformed rational literal: " + s);
        }
    }

    // Decimal / scientific form: mantissa [.fraction] [e exp], parsed exactly.
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
    std::string digits;
    long exp10 = 0;
    bool sawDigit = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        digits += s[i++];
        sawDigit = true;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i++];
            --exp10;
            sawDigit = true;
        }
    }
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        std::size_t pos = 0;
        try {
            exp10 += std::stol(s.substr(i), &pos);
        } catch (const std::exception&) {
            throw InvalidArgument("malformed rational literal: " + s);
        }
        i += pos;
    }
    if (!sawDigit || i != s.size()) throw InvalidArgument("malformed rational literal: " + s);

    Rational value(Int(digits.empty() ? "0" : digits));
    if (negative) value = -value;
    return value * ratPow(Rational(10), exp10);
}

double ratToDouble(const Rational& r) { return r.convert_to<double>(); }

}  // namespace pqcalc
