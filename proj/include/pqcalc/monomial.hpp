#pragma once

#include <array>
#include <compare>
#include <string>

#include "pqcalc/errors.hpp"

namespace pqcalc {

// The coefficient ring is Laurent polynomials over Q in the fixed variable set
// {p, q, h, x}. Negative exponents are allowed everywhere.
enum class Var : unsigned char { P = 0, Q = 1, H = 2, X = 3 };

inline constexpr std::array<Var, 4> kAllVars{Var::P, Var::Q, Var::H, Var::X};

const char* varName(Var v);
Var parseVar(char c);

struct Monomial {
    int p = 0;
    int q = 0;
    int h = 0;
    int x = 0;

    int exponent(Var v) const {
        switch (v) {
            case Var::P: return p;
            case Var::Q: return q;
            case Var::H: return h;
            case Var::X: return x;
        }
        throw InvalidArgument("bad variable");
    }
    void setExponent(Var v, int e) {
        switch (v) {
            case Var::P: p = e; return;
            case Var::Q: q = e; return;
            case Var::H: h = e; return;
            case Var::X: x = e; return;
        }
        throw InvalidArgument("bad variable");
    }

    long totalDegree() const { return long(p) + q + h + x; }
    bool isConstant() const { return p == 0 && q == 0 && h == 0 && x == 0; }

    Monomial operator*(const Monomial& o) const { return {p + o.p, q + o.q, h + o.h, x + o.x}; }
    Monomial inverse() const { return {-p, -q, -h, -x}; }
    // Componentwise k-th power (k may be negative).
    Monomial pow(int k) const { return {p * k, q * k, h * k, x * k}; }

    bool operator==(const Monomial&) const = default;

    static Monomial var(Var v, int e = 1) {
        Monomial m;
        m.setExponent(v, e);
        return m;
    }
};

// Graded lexicographic order: total degree first, then exponents of p, q, h, x.
// Used only to make canonical forms and serialized output deterministic.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const long da = a.totalDegree(), db = b.totalDegree();
        if (da != db) return da < db;
        if (a.p != b.p) return a.p < b.p;
        if (a.q != b.q) return a.q < b.q;
        if (a.h != b.h) return a.h < b.h;
        return a.x < b.x;
    }
};

}  // namespace pqcalc
