#include "csurg/knot_invariants.hpp"

#include <numeric>

namespace csurg {

namespace {

std::int64_t sgn(std::int64_t x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

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

std::int64_t nu_from_tau_epsilon(std::int64_t tau, std::int64_t epsilon) {
    return epsilon == -1 ? tau + 1 : tau;
}

std::vector<std::string> validate(const KnotInvariants& k) {
    std::vector<std::string> out;
    if (!(k.tau <= k.nu && k.nu <= k.tau + 1))
        out.push_back("nu-range: nu must lie in {tau, tau+1}");
    if (k.epsilon < -1 || k.epsilon > 1)
        out.push_back("epsilon-range: epsilon must be -1, 0 or 1");
    if (k.epsilon == 0 && (k.tau != 0 || k.nu != 0))
        out.push_back("epsilon-zero: epsilon = 0 forces tau = nu = 0");
    if (k.epsilon == 1 && k.nu != k.tau)
        out.push_back("epsilon-plus: epsilon = 1 forces nu = tau");
    if (k.epsilon == -1 && k.nu != k.tau + 1)
        out.push_back("epsilon-minus: epsilon = -1 forces nu = tau + 1");
    std::int64_t abs_tau = k.tau < 0 ? -k.tau : k.tau;
    if (k.slice_genus && abs_tau > *k.slice_genus)
        out.push_back("tau-slice-genus: |tau| must not exceed the slice genus");
    if (k.slice_genus && k.genus && *k.slice_genus > *k.genus)
        out.push_back("slice-genus-genus: slice genus must not exceed the genus");
    if (!k.slice_genus && k.genus && abs_tau > *k.genus)
        out.push_back("tau-genus: |tau| must not exceed the genus");
    if (k.sl_max && *k.sl_max > 2 * k.tau - 1)
        out.push_back("sl-bound: maximal self-linking number exceeds 2 tau - 1");
    return out;
}

KnotInvariants mirror(const KnotInvariants& k) {
    KnotInvariants m;
    if (k.name.rfind("m_", 0) == 0)
        m.name = k.name.substr(2);
    else
        m.name = "m_" + k.name;
    m.tau = -k.tau;
    m.epsilon = -k.epsilon;
    m.nu = nu_from_tau_epsilon(m.tau, m.epsilon);
    m.genus = k.genus;
    m.slice_genus = k.slice_genus;
    return m;
}

CableInvariants cable_invariants(const KnotInvariants& k, std::int64_t p, std::int64_t q) {
    if (p <= 0)
        throw DomainError("cable_invariants: p must be positive");
    if (gcd64(p, q) != 1)
        throw DomainError("cable_invariants: p and q must be coprime");
    if (p == 1)
        return {k.tau, k.epsilon, k.nu};

    CableInvariants c{};
    if (k.epsilon != 0) {
        std::int64_t twice = (p - 1) * (q - k.epsilon);
        internal_assert(twice % 2 == 0, "cable tau formula must be integral");
        c.tau = p * k.tau + twice / 2;
        c.epsilon = k.epsilon;
    } else {
        std::int64_t twice = (p - 1) * (q - sgn(q));
        internal_assert(twice % 2 == 0, "cable tau formula must be integral");
        c.tau = twice / 2;
        c.epsilon = (q >= -1 && q <= 1) ? 0 : sgn(q);
    }
    c.nu = nu_from_tau_epsilon(c.tau, c.epsilon);
    return c;
}

}  // namespace csurg
