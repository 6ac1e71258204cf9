#pragma once

#include "csurg/ding_geiges.hpp"
#include "csurg/legendrian.hpp"
#include "csurg/rational.hpp"
#include "csurg/verdict.hpp"

namespace csurg {

enum class Ambient { Standard, Overtwisted };

/// A contact surgery instruction: knot, coefficient (> 0 or infinite,
/// the meridional slope 0 is excluded), sign plan, and, for integer
/// coefficients, which of the two structures is meant.
struct SurgerySpec {
    LegendrianClass legendrian;
    Rational coefficient;
    SignPlan plan = SignPlan::negative();
    Sign variant = Sign::Minus;
};

/// Evaluate the positive-surgery gluing map on the unstable slot of the
/// Legendrian invariant by rewriting: stable classes die; slots >= 2 die
/// through an opposite stabilisation; slot 1 reduces along negative
/// stabilisations to the +1-map, which factors through the surgery cobordism,
/// injective exactly from framing 2 nu upward.
Verdict psi_eval(const EhSlot& slot, std::int64_t t, std::int64_t n,
                 std::int64_t tau, std::int64_t nu, std::int64_t epsilon);

/// Contact n-surgery on L, n >= 1, with the chosen stabilisation sign.
/// Nonzero iff the self-linking, surgery-coefficient and tau-nu conditions
/// all hold. The result depends on L only through its classical invariants.
/// Cross-checked against psi_eval on every call.
Verdict decide_integer(const LegendrianClass& l, std::int64_t n, Sign variant,
                       Ambient ambient = Ambient::Standard);

/// Contact p/q-surgery, p/q > 0 (or infinite), under a sign plan. Nonzero and
/// Zero are only reported when the rule set proves them; Unknown otherwise.
Verdict decide_rational(const LegendrianClass& l, const Rational& pq,
                        const SignPlan& plan = SignPlan::negative(),
                        Ambient ambient = Ambient::Standard);

/// The three decision conditions for the Legendrian (m,n)-cable at surgery
/// coefficient p: computed directly from the cable's invariants and as
/// predicted by the case table in terms of the companion. Requires m >= 2.
struct CableConditionsReport {
    bool sl_direct, sc_direct, tn_direct;
    bool sl_table, sc_table, tn_table;
    LegendrianClass cable_class;
};

CableConditionsReport cable_conditions(const LegendrianClass& l, std::int64_t m,
                                       std::int64_t n, std::int64_t p);

/// Contact n-surgery on the (m,n)-cable, n = 1 mod m, splits off a lens-space
/// summand: the surgered factor is the all-negative (n/m)-surgery on L and
/// the lens factor is Legendrian surgery on a stabilised unknot (nonzero
/// invariant), so nonvanishing is decided by the surgered factor alone.
struct CableSurgeryDecomposition {
    SurgerySpec factor;                  // (n/m)-surgery on L, all-negative plan
    bool trivial_lens;                   // m == 1
    std::int64_t lens_p = 0, lens_q = 0; // L(m, n)
    std::int64_t eta_tb = 0, eta_r = 0;  // unknot invariants behind the lens factor
};

CableSurgeryDecomposition cable_surgery_decompose(const LegendrianClass& l,
                                                  std::int64_t m, std::int64_t n);

enum class TightAnswer { Yes, Unknown };

/// Existence of a tight structure on the q-surgered sphere; the method only
/// proves existence.
TightAnswer tight_exists(const KnotInvariants& k, const Rational& q);

/// Nonvanishing of the inverse-limit transverse invariant.
Verdict transverse_nonzero(const KnotInvariants& k, std::int64_t sl, bool ambient_tight);

/// Rank of the hat Floer group of the f-surgered sphere (f != 0), per the
/// surgery dimension formula with catalog constant D.
std::int64_t hf_hat_dim(std::int64_t nu, std::int64_t d_const, std::int64_t f);

enum class CobordismRank { Injective, Zero };

/// The surgery cobordism map out of the sphere is injective exactly from
/// framing 2 nu upward, zero below.
CobordismRank cobordism_rank_rule(std::int64_t nu, std::int64_t f);

}  // namespace csurg
