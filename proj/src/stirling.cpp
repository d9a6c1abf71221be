#include "pqcalc/stirling.hpp"

#include <mutex>

namespace pqcalc {

StirlingVariant StirlingVariant::general(int s, Polynomial h, bool tilde) {
    StirlingVariant v;
    v.kind = StirlingKind::General;
    v.s = s;
    v.h = std::move(h);
    v.tilde = tilde;
    return v;
}

StirlingVariant StirlingVariant::touchard(int m, bool tilde) {
    if (m == 0) throw InvalidArgument("Touchard Stirling variant requires m != 0");
    StirlingVariant v;
    v.kind = StirlingKind::Touchard;
    v.m = m;
    v.tilde = tilde;
    return v;
}

StirlingVariant StirlingVariant::pq(bool tilde) {
    StirlingVariant v;
    v.kind = StirlingKind::PQ;
    v.tilde = tilde;
    return v;
}

StirlingVariant StirlingVariant::qVariant(bool tilde) {
    StirlingVariant v;
    v.kind = StirlingKind::Q;
    v.tilde = tilde;
    return v;
}

StirlingVariant StirlingVariant::classical() {
    StirlingVariant v;
    v.kind = StirlingKind::Classical;
    return v;
}

std::string StirlingVariant::name() const {
    std::string base;
    switch (kind) {
        case StirlingKind::General:
            base = "general(s=" + std::to_string(s) + ",h=" + h.str() + ")";
            break;
        case StirlingKind::Touchard: base = "touchard(m=" + std::to_string(m) + ")"; break;
        case StirlingKind::PQ: base = "pq"; break;
        case StirlingKind::Q: base = "q"; break;
        case StirlingKind::Classical: base = "classical"; break;
    }
    if (tilde) base += "~";
    return base;
}

StirlingTable::StirlingTable(StirlingVariant variant, unsigned maxN) : variant_(std::move(variant)) {
    rows_.push_back({Polynomial::one()});  // S(0,0) = 1
    computeRows(maxN);
}

void StirlingTable::extendTo(unsigned maxN) { computeRows(maxN); }

void StirlingTable::computeRows(unsigned upTo) {
    // The recurrence coefficients per variant. The q and classical variants
    // run the general s=0, h=1 recurrence and substitute afterwards; the
    // substitutions are ring homomorphisms, so the results coincide with
    // running the specialized recurrences directly.
    const bool touchard = variant_.kind == StirlingKind::Touchard;
    const int s = touchard ? 0 : variant_.s;
    const int m = variant_.m;
    Polynomial h = variant_.h;
    if (variant_.kind == StirlingKind::PQ || variant_.kind == StirlingKind::Q ||
        variant_.kind == StirlingKind::Classical)
        h = Polynomial::one();

    while (maxN() < upTo) {
        const unsigned n = maxN();  // building row n+1 from row n
        const auto& prev = rows_.back();
        std::vector<Polynomial> row(n + 2, Polynomial::zero());
        for (unsigned k = 1; k <= n + 1; ++k) {
            Polynomial up;  // coefficient of S(n, k-1)
            Polynomial stay;  // coefficient of S(n, k)
            const int nk = int(n) - int(k) + 1;  // n-k+1 with the paper's indices
            if (touchard) {
                up = Polynomial(Monomial{nk, (m - 1) * nk + m * (int(k) - 1), 0, 0}, Rational(1));
                stay = pqNumber((m - 1) * (int(n) - int(k)) + m * int(k));
            } else {
                up = Polynomial(Monomial{nk, s * nk + int(k) - 1, 0, 0}, Rational(1));
                stay = h * pqNumber(s * (int(n) - int(k)) + int(k));
            }
            Polynomial value = up * prev[k - 1];
            if (k <= n) value += stay * prev[k];
            row[k] = std::move(value);
        }
        rows_.push_back(std::move(row));
    }

    if (variant_.kind == StirlingKind::Q || variant_.kind == StirlingKind::Classical) {
        for (auto& row : rows_)
            for (auto& e : row) {
                e = e.substituteValue(Var::P, Rational(1));
                if (variant_.kind == StirlingKind::Classical)
                    e = e.substituteValue(Var::Q, Rational(1));
            }
    }
}

Polynomial StirlingTable::entry(unsigned n, unsigned k) const {
    if (k > n || n >= rows_.size()) return Polynomial::zero();
    const Polynomial& raw = rows_[n][k];
    if (!variant_.tilde) return raw;
    return raw * Polynomial::variable(Var::P, int(binom2(long(k))));
}

const Polynomial& StirlingTable::rawEntry(unsigned n, unsigned k) const {
    static const Polynomial kZero;
    if (k > n || n >= rows_.size()) return kZero;
    return rows_[n][k];
}

Polynomial stirlingGeneral(unsigned n, unsigned k, int s, const Polynomial& h) {
    return cachedTable(StirlingVariant::general(s, h), n).rawEntry(n, k);
}

Polynomial stirlingTouchard(unsigned n, unsigned k, int m) {
    return cachedTable(StirlingVariant::touchard(m), n).rawEntry(n, k);
}

Polynomial bellPolynomial(unsigned n, const StirlingVariant& variant, const Polynomial& x) {
    const StirlingTable& table = cachedTable(variant, n);
    Polynomial sum;
    Polynomial xpow = Polynomial::one();
    for (unsigned k = 0; k <= n; ++k) {
        sum += table.entry(n, k) * xpow;
        if (k < n) xpow *= x;
    }
    return sum;
}

std::map<unsigned, Int> classicalStirlingRow(unsigned n) {
    if (n > 12) throw ResourceLimit("set-partition enumeration is limited to n <= 12");
    std::map<unsigned, Int> counts;
    if (n == 0) {
        counts[0] = 1;
        return counts;
    }
    // Walk all restricted-growth strings a_0..a_{n-1}: a_0 = 0,
    // a_i <= 1 + max(a_0..a_{i-1}). Each string is one set partition; the
    // number of blocks is max + 1.
    std::vector<unsigned> a(n, 0);
    std::vector<unsigned> maxPrefix(n, 0);
    std::size_t i = 1;
    while (true) {
        if (i == n) {
            counts[maxPrefix[n - 1] + 1] += 1;
            // backtrack
            while (i-- > 1) {
                if (a[i] <= maxPrefix[i - 1]) {
                    ++a[i];
                    maxPrefix[i] = std::max(maxPrefix[i - 1], a[i]);
                    break;
                }
                a[i] = 0;
            }
            if (i == 0) break;
            ++i;
            continue;
        }
        a[i] = 0;
        maxPrefix[i] = maxPrefix[i - 1];
        ++i;
    }
    return counts;
}

Int classicalBell(unsigned n) {
    Int total = 0;
    for (const auto& [k, c] : classicalStirlingRow(n)) total += c;
    return total;
}

const StirlingTable& cachedTable(const StirlingVariant& variant, unsigned minRows) {
    static std::mutex mutex;
    static std::map<std::string, StirlingTable> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.try_emplace(variant.name(), variant, minRows);
    if (!inserted && it->second.maxN() < minRows) it->second.extendTo(minRows);
    return it->second;
}

}  // namespace pqcalc
