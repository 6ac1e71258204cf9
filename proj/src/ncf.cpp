#include "csurg/ncf.hpp"

namespace csurg {

NcfExpansion::NcfExpansion(std::vector<std::int64_t> e) : entries(std::move(e)) {
    for (std::int64_t a : entries)
        if (a < 2)
            throw DomainError("negative continued fraction entry < 2");
}

NcfExpansion ncf_expand(const Rational& r0) {
    if (r0.is_infinite())
        throw DomainError("ncf_expand: infinite input");
    if (r0 < Rational(2))
        throw DomainError("ncf_expand: input below 2");

    // a_0 = ceil(r), then recurse on 1/(a_0 - r); denominators strictly decrease.
    std::vector<std::int64_t> out;
    Rational r = r0;
    while (true) {
        std::int64_t a = r.ceil();
        out.push_back(a);
        if (r.is_integer())
            break;
        r = Rational(1) / (Rational(a) - r);
    }
    return NcfExpansion(std::move(out));
}

Rational ncf_eval(const NcfExpansion& e) {
    if (e.empty())
        throw DomainError("ncf_eval: empty expansion has no canonical value");
    Rational v(e.entries.back());
    for (std::size_t i = e.entries.size() - 1; i-- > 0;)
        v = Rational(e.entries[i]) - Rational(1) / v;
    return v;
}

bool ncf_is_prefix(const NcfExpansion& a, const NcfExpansion& b) {
    if (a.size() > b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.entries[i] != b.entries[i])
            return false;
    return true;
}

}  // namespace csurg
