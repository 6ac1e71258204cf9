#pragma once

#include <optional>

#include "csurg/knot_invariants.hpp"

namespace csurg {

enum class Sign { Plus, Minus };

/// A Legendrian knot up to its classical invariants: topological type plus
/// (tb, r). tb - r is odd for every Legendrian knot.
struct LegendrianClass {
    KnotInvariants knot;
    std::int64_t tb = 0;
    std::int64_t r = 0;
};

/// Self-linking number of the transverse push-off, tb - r.
inline std::int64_t transverse_sl(const LegendrianClass& l) { return l.tb - l.r; }

/// k-fold stabilisation: tb drops by k, r moves by +k (positive) or -k (negative).
LegendrianClass stabilize(const LegendrianClass& l, Sign sign, std::int64_t k);

/// Legendrian (m,n)-cable: tb' = m^2 tb + (m-1) n, r' = m r, of topological
/// type the (m, m tb + n)-cable. Requires m >= 1, n >= 0, gcd(m, n) = 1.
LegendrianClass cable(const LegendrianClass& l, std::int64_t m, std::int64_t n);

/// Slot coordinate of the unstable projection of the Legendrian invariant.
/// Fixed by: slot 1 iff the self-linking condition holds; negative
/// stabilisation preserves the slot; positive stabilisation increments it.
/// Stable means the relevant Bennequin-type bound fails so the invariant has
/// no unstable component.
struct EhSlot {
    bool stable = false;
    std::int64_t slot = 0;  // valid iff !stable, 1 <= slot <= 2 tau - tb

    static EhSlot stable_class() { return EhSlot{true, 0}; }
    static EhSlot at(std::int64_t s) { return EhSlot{false, s}; }
    bool operator==(const EhSlot& o) const {
        return stable == o.stable && (stable || slot == o.slot);
    }
};

EhSlot eh_slot(const LegendrianClass& l, Sign sign);

}  // namespace csurg
