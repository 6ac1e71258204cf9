#include "csurg/surgery_calculus.hpp"

#include <algorithm>

namespace csurg {

namespace {

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

bool bennequin_ok(const LegendrianClass& l) {
    const std::int64_t bound = 2 * l.knot.tau - 1;
    return l.tb - l.r <= bound && l.tb + l.r <= bound;
}

Verdict zero_with(std::string rule, std::string cite) {
    Verdict v;
    v.value = Verdict::Value::Zero;
    v.step(std::move(rule), std::move(cite));
    return v;
}

}  // namespace

Verdict psi_eval(const EhSlot& slot, std::int64_t t, std::int64_t n,
                 std::int64_t tau, std::int64_t nu, std::int64_t epsilon) {
    if (n < 1)
        throw DomainError("psi_eval: the surgery coefficient must be a positive integer");
    if (t > 2 * tau - 1)
        throw DomainError("psi_eval: column above the unstable range");
    if (!(tau <= nu && nu <= tau + 1))
        throw DomainError("psi_eval: nu must lie in {tau, tau+1}");
    if (epsilon < -1 || epsilon > 1)
        throw DomainError("psi_eval: epsilon out of range");

    Verdict v;
    if (slot.stable) {
        v.value = Verdict::Value::Zero;
        v.step("stable-kill", "stable classes vanish under every positive surgery map");
        return v;
    }
    if (slot.slot < 1 || slot.slot > 2 * tau - t)
        throw DomainError("psi_eval: slot outside the unstable column");

    if (slot.slot >= 2) {
        v.value = Verdict::Value::Zero;
        v.step("opposite-stabilisation-kill",
               "u_l with l >= 2 is a positive stabilisation image, and the negative "
               "surgery map annihilates positive stabilisations");
        return v;
    }

    const std::int64_t s = t + n;  // the topological surgery framing
    if (s < 2 * tau) {
        v.step("surgery-stabilisation-descent",
               "slide along negative stabilisations to the +1-surgery map at column " +
                   std::to_string(s - 1));
        v.step("triangle-factorisation",
               "the +1-surgery map factors through the surgery cobordism at framing " +
                   std::to_string(s));
        v.value = Verdict::Value::Zero;
        v.step("cobordism-vanishing",
               "the cobordism map vanishes below framing 2 nu = " + std::to_string(2 * nu));
        return v;
    }
    if (s == 2 * tau) {
        v.step("surgery-stabilisation-descent",
               "slide along negative stabilisations to the +1-surgery map at the vertex column");
        v.step("triangle-factorisation",
               "the +1-surgery map factors through the surgery cobordism at framing " +
                   std::to_string(s));
        if (tau == nu) {
            v.value = Verdict::Value::Nonzero;
            v.step("cobordism-injectivity",
                   "the cobordism map is injective from framing 2 nu upward and the "
                   "trivial-filling image is the nonzero tight class");
        } else {
            v.value = Verdict::Value::Zero;
            v.step("cobordism-vanishing",
                   "framing 2 tau sits below 2 nu = " + std::to_string(2 * nu));
        }
        return v;
    }
    // s > 2 tau: the threshold case decides, in both directions.
    if (tau == nu) {
        v.value = Verdict::Value::Nonzero;
        v.step("legendrian-surgery-monotonicity",
               "nonvanishing at the threshold coefficient persists under the Legendrian "
               "surgeries that raise the coefficient");
    } else {
        v.value = Verdict::Value::Zero;
        v.step("cable-obstruction",
               "with nu = tau + 1 the half-twist double cable loses the self-linking "
               "condition, killing the invariant above the threshold as well");
    }
    return v;
}

Verdict decide_integer(const LegendrianClass& l, std::int64_t n, Sign variant,
                       Ambient ambient) {
    if (n < 1)
        throw DomainError("decide_integer: the coefficient must be a positive integer");
    if (ambient == Ambient::Overtwisted)
        return zero_with("stable-eh",
                         "in an overtwisted structure the Legendrian invariant is stable, "
                         "and stable classes die under surgery maps");
    if (!bennequin_ok(l))
        throw DomainError("decide_integer: classical invariants violate the Bennequin-type "
                          "bounds of the standard structure");

    const std::int64_t tau = l.knot.tau;
    const std::int64_t nu = l.knot.nu;
    const std::int64_t r_eff = (variant == Sign::Minus) ? l.r : -l.r;

    const bool sl = (l.tb - r_eff == 2 * tau - 1);
    const bool sc = (n + l.tb >= 2 * tau);
    const bool tn = (tau == nu);

    Verdict v;
    v.step(std::string("condition-sl"),
           std::string(sl ? "holds" : "fails") + ": tb - r = " + std::to_string(l.tb - r_eff) +
               " vs 2 tau - 1 = " + std::to_string(2 * tau - 1) +
               (variant == Sign::Plus ? " (orientation reversed)" : ""));
    v.step("condition-sc", std::string(sc ? "holds" : "fails") + ": n + tb = " +
                               std::to_string(n + l.tb) + " vs 2 tau = " + std::to_string(2 * tau));
    v.step("condition-tn", std::string(tn ? "holds" : "fails") + ": tau = " + std::to_string(tau) +
                               ", nu = " + std::to_string(nu));
    v.value = (sl && sc && tn) ? Verdict::Value::Nonzero : Verdict::Value::Zero;

    // Independent route: the slot evaluator must agree.
    Verdict psi = psi_eval(eh_slot(l, variant), l.tb, n, tau, nu, l.knot.epsilon);
    internal_assert(psi.value == v.value,
                    "decide_integer: closed form and slot evaluator disagree");
    return v;
}

namespace {

/// Signs of the plan at the stabilisation slots of the presentation of the
/// bracket base n + 1/m inside the presentation of pq (the chains agree on
/// that prefix). Flattened, first slot first.
std::vector<int> base_slot_signs(const DgPresentation& full, const DgPresentation& base) {
    internal_assert(base.chain.size() <= full.chain.size(),
                    "bracket base chain longer than the full chain");
    std::vector<int> out;
    for (std::size_t i = 0; i < base.chain.size(); ++i) {
        internal_assert(full.chain[i] == base.chain[i],
                        "bracket base chain must be an initial segment");
        for (std::int64_t s = 0; s < base.chain[i]; ++s)
            out.push_back(full.signs[i][static_cast<std::size_t>(s)]);
    }
    return out;
}

}  // namespace

Verdict decide_rational(const LegendrianClass& l, const Rational& pq, const SignPlan& plan,
                        Ambient ambient) {
    if (ambient == Ambient::Overtwisted)
        return zero_with("stable-eh",
                         "in an overtwisted structure the Legendrian invariant is stable, "
                         "and stable classes die under surgery maps");
    if (pq.is_infinite()) {
        Verdict v;
        v.value = Verdict::Value::Nonzero;
        v.step("trivial-filling",
               "infinite surgery glues back the standard tight sphere, whose invariant "
               "is nonzero");
        return v;
    }
    if (!(Rational(0) < pq))
        throw DomainError("decide_rational: the coefficient must be positive");
    if (!bennequin_ok(l))
        throw DomainError("decide_rational: classical invariants violate the Bennequin-type "
                          "bounds of the standard structure");

    if (pq.is_integer()) {
        const std::int64_t n = pq.num();
        Sign variant = Sign::Minus;
        if (n >= 2 && !plan.all_negative) {
            DgPresentation d = dg_expand(pq, plan);
            variant = (d.signs[0][0] == -1) ? Sign::Minus : Sign::Plus;
        }
        Verdict v = decide_integer(l, n, variant);
        v.trace.insert(v.trace.begin(),
                       {"integer-coefficient", "decided by the three main conditions"});
        return v;
    }

    const Bracket br = bracket_of(pq);  // m >= 2 here since pq is not an integer
    DgPresentation full = dg_expand(pq, plan);
    DgPresentation base = dg_expand(Rational(br.n) + Rational(1, br.m));

    // Mixed signs among the base stabilisations produce an overtwisted layer.
    if (br.n >= 1) {
        auto signs = base_slot_signs(full, base);
        internal_assert(static_cast<std::int64_t>(signs.size()) ==
                            dg_total_stabilizations(base),
                        "bracket base must occupy a sign-plan prefix");
        for (int s : signs)
            if (s == +1)
                return zero_with("mixed-signs-overtwisted",
                                 "a positive stabilisation among the first " +
                                     std::to_string(signs.size()) +
                                     " choices makes the surgery layer overtwisted, "
                                     "independently of the knot");
    }

    // Orientation-independent obstruction: both self-linking conditions fail.
    const std::int64_t bound = 2 * l.knot.tau - 1;
    if (!br.exact && Rational(1) <= pq && l.tb - l.r != bound && l.tb + l.r != bound) {
        return zero_with("both-orientations-blocked",
                         "the self-linking condition fails for both orientations, so every "
                         "presentation factors through a vanishing integer case");
    }

    // The bracket base n + 1/m is decided exactly: contact (nm+1)-surgery on
    // the (m, nm+1)-cable splits as the base surgery summed with a lens-space
    // factor of nonzero invariant.
    const std::int64_t cable_twist = br.n * br.m + 1;
    CableSurgeryDecomposition dec = cable_surgery_decompose(l, br.m, cable_twist);
    Verdict base_verdict =
        decide_integer(cable(l, br.m, cable_twist), cable_twist, Sign::Minus);

    Verdict v;
    v.step("cable-connected-sum",
           "coefficient " + dec.factor.coefficient.str() + " is the surgered factor of the " +
               std::to_string(cable_twist) + "-surgery on the (" + std::to_string(br.m) + "," +
               std::to_string(cable_twist) + ")-cable; the lens factor carries a nonzero "
               "invariant");
    v.trace.insert(v.trace.end(), base_verdict.trace.begin(), base_verdict.trace.end());
    if (br.exact) {
        v.value = base_verdict.value;
        return v;
    }
    if (base_verdict.nonzero()) {
        v.value = Verdict::Value::Nonzero;
        v.step("prefix-monotonicity",
               "the presentation extends the bracket base by Legendrian surgeries, which "
               "preserve nonvanishing");
        return v;
    }
    v.value = Verdict::Value::Unknown;
    v.step("one-sided-information",
           "vanishing of the bracket base does not propagate through the extra Legendrian "
           "surgeries");
    return v;
}

CableConditionsReport cable_conditions(const LegendrianClass& l, std::int64_t m,
                                       std::int64_t n, std::int64_t p) {
    if (m < 2)
        throw DomainError("cable_conditions: the case table needs m >= 2");
    CableConditionsReport rep{};
    rep.cable_class = cable(l, m, n);
    const auto& ck = rep.cable_class.knot;

    rep.sl_direct = (rep.cable_class.tb - rep.cable_class.r == 2 * ck.tau - 1);
    rep.sc_direct = (p + rep.cable_class.tb >= 2 * ck.tau);
    rep.tn_direct = (ck.tau == ck.nu);

    const std::int64_t tau = l.knot.tau;
    const bool sl_l = (l.tb - l.r == 2 * tau - 1);
    const bool tn_l = (l.knot.tau == l.knot.nu);
    if (l.knot.epsilon != 0) {
        rep.sl_table = sl_l && tn_l;
        rep.tn_table = tn_l;
    } else {
        rep.sl_table = sl_l && (n >= 1 - m * l.tb);
        rep.tn_table = (n >= -1 - m * l.tb);
    }
    rep.sc_table = (p >= 1 - m * l.r);

    if (p >= 1) {
        Verdict direct = decide_integer(rep.cable_class, p, Sign::Minus);
        internal_assert(direct.nonzero() == (rep.sl_direct && rep.sc_direct && rep.tn_direct),
                        "cable_conditions: direct conditions disagree with the decision");
    }
    return rep;
}

CableSurgeryDecomposition cable_surgery_decompose(const LegendrianClass& l, std::int64_t m,
                                                  std::int64_t n) {
    if (m < 1)
        throw DomainError("cable_surgery_decompose: m must be >= 1");
    if (n < 1)
        throw DomainError("cable_surgery_decompose: n must be >= 1");
    if (m > 1 && (n - 1) % m != 0)
        throw DomainError("cable_surgery_decompose: needs n = 1 mod m");

    CableSurgeryDecomposition out;
    out.factor.legendrian = l;
    out.factor.coefficient = Rational(n, m);
    out.factor.plan = SignPlan::negative();
    out.trivial_lens = (m == 1);
    if (m > 1) {
        out.lens_p = m;
        out.lens_q = n;
        out.eta_tb = 1 - m;
        out.eta_r = 2 - m;
    }
    return out;
}

TightAnswer tight_exists(const KnotInvariants& k, const Rational& q) {
    if (q.is_infinite())
        throw DomainError("tight_exists: the coefficient must be finite");
    const bool sl_rep = k.sl_max && *k.sl_max == 2 * k.tau - 1;
    if (k.epsilon == 1 && sl_rep && Rational(2 * k.tau - 1) < q)
        return TightAnswer::Yes;
    if (k.epsilon == 0 && sl_rep && Rational(0) <= q)
        return TightAnswer::Yes;
    return TightAnswer::Unknown;
}

Verdict transverse_nonzero(const KnotInvariants& k, std::int64_t sl, bool ambient_tight) {
    if (abs64(sl) % 2 != 1)
        throw DomainError("transverse_nonzero: self-linking numbers are odd");
    Verdict v;
    if (!ambient_tight) {
        v.value = Verdict::Value::Zero;
        v.step("ambient-overtwisted", "the invariant vanishes away from the standard structure");
        return v;
    }
    const bool sl_ok = (sl == 2 * k.tau - 1);
    const bool tn_ok = (k.tau == k.nu);
    v.value = (sl_ok && tn_ok) ? Verdict::Value::Nonzero : Verdict::Value::Zero;
    v.step("condition-sl", sl_ok ? "self-linking number is maximal" : "self-linking condition fails");
    v.step("condition-tn", tn_ok ? "tau equals nu" : "tau differs from nu");
    return v;
}

std::int64_t hf_hat_dim(std::int64_t nu, std::int64_t d_const, std::int64_t f) {
    if (f == 0)
        throw DomainError("hf_hat_dim: framing 0 is excluded");
    std::int64_t corr = 2 * nu - 1 - f;
    if (corr < 0)
        corr = 0;
    return abs64(f) + 2 * corr + d_const;
}

CobordismRank cobordism_rank_rule(std::int64_t nu, std::int64_t f) {
    if (f == 0)
        throw DomainError("cobordism_rank_rule: framing 0 is excluded");
    return f >= 2 * nu ? CobordismRank::Injective : CobordismRank::Zero;
}

}  // namespace csurg
