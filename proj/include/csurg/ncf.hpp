#pragma once

#include <vector>

#include "csurg/rational.hpp"

namespace csurg {

/// Negative continued fraction expansion [a_0, ..., a_l],
/// r = a_0 - 1/(a_1 - 1/(... - 1/a_l)), every entry >= 2.
struct NcfExpansion {
    std::vector<std::int64_t> entries;

    NcfExpansion() = default;
    explicit NcfExpansion(std::vector<std::int64_t> e);

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
};

/// Expand a finite rational r >= 2. Entries satisfy a_0 = ceil(r), all >= 2.
NcfExpansion ncf_expand(const Rational& r);

/// Evaluate an expansion by the right fold v <- a_i - 1/v. Empty input is an error.
Rational ncf_eval(const NcfExpansion& e);

/// True iff a.entries is an initial segment of b.entries.
bool ncf_is_prefix(const NcfExpansion& a, const NcfExpansion& b);

}  // namespace csurg
