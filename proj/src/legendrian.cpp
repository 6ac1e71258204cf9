#include "csurg/legendrian.hpp"

namespace csurg {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

LegendrianClass stabilize(const LegendrianClass& l, Sign sign, std::int64_t k) {
    if (k < 0)
        throw DomainError("stabilize: negative count");
    LegendrianClass out = l;
    out.tb -= k;
    out.r += (sign == Sign::Plus) ? k : -k;
    return out;
}

LegendrianClass cable(const LegendrianClass& l, std::int64_t m, std::int64_t n) {
    if (m < 1)
        throw DomainError("cable: m must be >= 1");
    if (n < 0)
        throw DomainError("cable: the construction requires n >= 0");
    if (gcd64(m, n) != 1)
        throw DomainError("cable: m and n must be coprime");
    if (m == 1)
        return l;

    LegendrianClass out;
    out.tb = m * m * l.tb + (m - 1) * n;
    out.r = m * l.r;
    CableInvariants ci = cable_invariants(l.knot, m, m * l.tb + n);
    out.knot.name = l.knot.name + "_cable_" + std::to_string(m) + "_" + std::to_string(n);
    out.knot.tau = ci.tau;
    out.knot.nu = ci.nu;
    out.knot.epsilon = ci.epsilon;
    return out;
}

EhSlot eh_slot(const LegendrianClass& l, Sign sign) {
    const std::int64_t tau = l.knot.tau;
    if (l.tb >= 2 * tau)
        throw DomainError("eh_slot: tb >= 2 tau never occurs for the standard structure");
    const std::int64_t r_eff = (sign == Sign::Minus) ? l.r : -l.r;
    const std::int64_t twice = 2 * tau + 1 - l.tb + r_eff;
    if (twice % 2 != 0)
        throw DomainError("eh_slot: tb - r must be odd");
    const std::int64_t slot = twice / 2;
    if (slot < 1 || slot > 2 * tau - l.tb)
        return EhSlot::stable_class();
    return EhSlot::at(slot);
}

}  // namespace csurg
