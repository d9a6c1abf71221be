#pragma once

#include <map>
#include <string>
#include <vector>

#include "pqcalc/pq_numbers.hpp"

namespace pqcalc {

enum class StirlingKind { General, Touchard, PQ, Q, Classical };

// A Stirling triangle variant. `tilde` multiplies entry (n,k) by p^{C(k,2)}.
struct StirlingVariant {
    StirlingKind kind = StirlingKind::General;
    int s = 0;
    Polynomial h = Polynomial::one();  // symbolic h is the ring variable h
    int m = 1;                         // Touchard order
    bool tilde = false;

    static StirlingVariant general(int s, Polynomial h, bool tilde = false);
    static StirlingVariant touchard(int m, bool tilde = false);
    static StirlingVariant pq(bool tilde = false);       // general(0, 1)
    static StirlingVariant qVariant(bool tilde = false); // general(0, 1) at p = 1
    static StirlingVariant classical();                  // p = q = 1

    std::string name() const;
};

// Recurrence-computed triangle (n,k) -> Polynomial, rows immutable once built.
class StirlingTable {
public:
    StirlingTable(StirlingVariant variant, unsigned maxN);

    const StirlingVariant& variant() const { return variant_; }
    unsigned maxN() const { return unsigned(rows_.size()) - 1; }
    void extendTo(unsigned maxN);

    // Entry with the variant's tilde factor applied when set; zero outside
    // the triangle.
    Polynomial entry(unsigned n, unsigned k) const;
    // Entry without the tilde factor.
    const Polynomial& rawEntry(unsigned n, unsigned k) const;

    const std::vector<std::vector<Polynomial>>& rows() const { return rows_; }

private:
    void computeRows(unsigned upTo);
    StirlingVariant variant_;
    std::vector<std::vector<Polynomial>> rows_;
};

// S_{s;h}(n,k|p,q) from the two-term recurrence
//   S(n+1,k) = p^{n-k+1} q^{s(n-k+1)+k-1} S(n,k-1) + h [s(n-k)+k]_{p,q} S(n,k)
// with S(n,0) = delta_{n,0}, S(0,k) = delta_{0,k}.
Polynomial stirlingGeneral(unsigned n, unsigned k, int s, const Polynomial& h);

// Order-m Stirling numbers S^{(m)}(n,k) = S_{(m-1)/m;[m]_{p,q}}(n,k|p,q^m),
// computed with integral exponents:
//   S(n+1,k) = p^{n-k+1} q^{(m-1)(n-k+1)+m(k-1)} S(n,k-1)
//              + [(m-1)(n-k)+mk]_{p,q} S(n,k).
// The h-bracket product [m]_{p,q}[s(n-k)+k]_{p^m,q^m} collapses to the single
// bracket via the composition law [ma]_{p,q} = [m]_{p,q}[a]_{p^m,q^m}.
Polynomial stirlingTouchard(unsigned n, unsigned k, int m);

// Row generating polynomial sum_k entry(n,k) x^k, with x an arbitrary
// polynomial argument (x = 1 gives Bell numbers).
Polynomial bellPolynomial(unsigned n, const StirlingVariant& variant, const Polynomial& x);

// Classical S(n,k) by exhaustive set-partition enumeration. Independent of
// every recurrence in this library; n <= 12.
std::map<unsigned, Int> classicalStirlingRow(unsigned n);
Int classicalBell(unsigned n);

// Shared immutable table cache; tables are extended on demand.
const StirlingTable& cachedTable(const StirlingVariant& variant, unsigned minRows);

}  // namespace pqcalc
