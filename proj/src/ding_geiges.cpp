#include "csurg/ding_geiges.hpp"

namespace csurg {

DgPresentation dg_expand(const Rational& pq, const SignPlan& plan) {
    if (pq.is_infinite())
        throw DomainError("dg_expand: infinite coefficient");
    if (!(Rational(0) < pq))
        throw DomainError("dg_expand: coefficient must be positive");

    const std::int64_t p = pq.num();
    const std::int64_t q = pq.den();

    DgPresentation out;
    out.coefficient = pq;
    // Minimal k with q - kp <= 0; kp = q is the 1/k case with no Legendrian part.
    out.k = Rational(q, p).ceil();
    if (out.k * p != q) {
        Rational r = Rational(1) + Rational(p, out.k * p - q);
        NcfExpansion e = ncf_expand(r);
        out.chain.reserve(e.size());
        for (std::int64_t a : e.entries)
            out.chain.push_back(a - 2);
    }

    if (plan.all_negative) {
        for (std::int64_t c : out.chain)
            out.signs.emplace_back(static_cast<std::size_t>(c), -1);
    } else {
        if (plan.signs.size() != out.chain.size())
            throw DomainError("dg_expand: sign plan shape mismatch (chain length)");
        for (std::size_t i = 0; i < out.chain.size(); ++i) {
            if (static_cast<std::int64_t>(plan.signs[i].size()) != out.chain[i])
                throw DomainError("dg_expand: sign plan shape mismatch (stabilisation count)");
            for (int s : plan.signs[i])
                if (s != 1 && s != -1)
                    throw DomainError("dg_expand: signs must be +1 or -1");
        }
        out.signs = plan.signs;
    }
    return out;
}

std::int64_t dg_total_stabilizations(const DgPresentation& d) {
    std::int64_t total = 0;
    for (std::int64_t c : d.chain)
        total += c;
    return total;
}

bool dg_prefix_check(std::int64_t n, std::int64_t m, const Rational& pq) {
    if (m < 1)
        throw DomainError("dg_prefix_check: m must be >= 1");
    if (n < 0)
        throw DomainError("dg_prefix_check: n must be >= 0");
    Rational lo = Rational(n) + Rational(1, m);
    if (pq < lo)
        throw DomainError("dg_prefix_check: pq below n + 1/m");
    if (m > 1) {
        Rational hi = Rational(n) + Rational(1, m - 1);
        if (!(pq < hi))
            throw DomainError("dg_prefix_check: pq not below n + 1/(m-1)");
    }
    DgPresentation base = dg_expand(lo);
    DgPresentation full = dg_expand(pq);
    if (base.k != full.k)
        return false;
    NcfExpansion be, fe;
    for (std::int64_t c : base.chain)
        be.entries.push_back(c + 2);
    for (std::int64_t c : full.chain)
        fe.entries.push_back(c + 2);
    return ncf_is_prefix(be, fe);
}

Bracket bracket_of(const Rational& pq) {
    if (pq.is_infinite() || !(Rational(0) < pq))
        throw DomainError("bracket_of: needs a finite positive coefficient");
    if (pq.is_integer())
        return Bracket{pq.num() - 1, 1, true};
    std::int64_t n = pq.floor();
    Rational frac = pq - Rational(n);
    std::int64_t m = (Rational(1) / frac).ceil();
    return Bracket{n, m, frac == Rational(1, m)};
}

}  // namespace csurg
