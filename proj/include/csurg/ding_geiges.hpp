#pragma once

#include <vector>

#include "csurg/ncf.hpp"
#include "csurg/rational.hpp"

namespace csurg {

/// Sign plan for the stabilisations of a surgery presentation.
struct SignPlan {
    bool all_negative = true;
    std::vector<std::vector<int>> signs;  // used iff !all_negative; entries +1/-1

    static SignPlan negative() { return SignPlan{}; }
    static SignPlan explicit_signs(std::vector<std::vector<int>> s) {
        return SignPlan{false, std::move(s)};
    }
};

/// Result of the surgery-presentation algorithm for a positive rational
/// coefficient p/q: k push-offs carrying +1-surgeries, plus a chain of
/// push-offs carrying Legendrian surgeries, with chain[i] = a_i - 2
/// stabilisations on the i-th chain knot and one sign per stabilisation.
struct DgPresentation {
    Rational coefficient;
    std::int64_t k = 0;
    std::vector<std::int64_t> chain;
    std::vector<std::vector<int>> signs;  // signs[i].size() == chain[i], entries +1/-1
};

/// Expand p/q > 0. k = ceil(q/p); the chain is empty exactly when kp = q
/// (coefficient 1/k), otherwise it is the negative continued fraction
/// expansion of 1 + p/(kp - q) with 2 subtracted entrywise.
DgPresentation dg_expand(const Rational& pq, const SignPlan& plan = SignPlan::negative());

std::int64_t dg_total_stabilizations(const DgPresentation& d);

/// True iff the presentations of n + 1/m and of pq share k and the chain of
/// the former is an initial segment of the chain of the latter. Requires
/// n + 1/m <= pq < n + 1/(m-1) (with 1/0 read as infinity).
bool dg_prefix_check(std::int64_t n, std::int64_t m, const Rational& pq);

/// The bracket [n + 1/m, n + 1/(m-1)) containing pq: n = floor away the
/// integer part, m from the fractional part; for integers, m = 1.
struct Bracket {
    std::int64_t n;
    std::int64_t m;
    bool exact;  // pq == n + 1/m
};
Bracket bracket_of(const Rational& pq);

}  // namespace csurg
