#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csurg/errors.hpp"

namespace csurg {

/// Concordance-type invariants of a topological knot.
///
/// tau, nu, epsilon are always present and tied together by
///   tau <= nu <= tau + 1,  epsilon in {-1, 0, 1},
///   epsilon = 0  =>  tau = nu = 0,
///   epsilon = 1  =>  nu = tau,    epsilon = -1  =>  nu = tau + 1.
/// Genus data and the maximal classical invariants are optional catalog inputs.
struct KnotInvariants {
    std::string name;
    std::int64_t tau = 0;
    std::int64_t nu = 0;
    std::int64_t epsilon = 0;
    std::optional<std::int64_t> genus;        // Seifert genus g
    std::optional<std::int64_t> slice_genus;  // g*
    std::optional<std::int64_t> tb_max;       // maximal Thurston-Bennequin number
    std::optional<std::int64_t> sl_max;       // maximal self-linking number
    std::optional<std::int64_t> hf_d;         // constant D in the surgery dimension formula
};

/// Empty iff the record is consistent; each entry names the broken constraint.
std::vector<std::string> validate(const KnotInvariants& k);

/// Mirror image: tau and epsilon flip sign, nu is recomputed from the epsilon
/// branch, genus data is preserved, tb_max/sl_max/hf_d are dropped (mirroring
/// does not determine them).
KnotInvariants mirror(const KnotInvariants& k);

/// nu determined by (tau, epsilon).
std::int64_t nu_from_tau_epsilon(std::int64_t tau, std::int64_t epsilon);

struct CableInvariants {
    std::int64_t tau;
    std::int64_t epsilon;
    std::int64_t nu;
};

/// tau/epsilon/nu of the (p,q)-cable. For p = 1 the cable is the knot itself.
CableInvariants cable_invariants(const KnotInvariants& k, std::int64_t p, std::int64_t q);

}  // namespace csurg
