#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csurg/errors.hpp"

namespace csurg {

/// Arrow of the reduced knot Floer complex in doubled Alexander gradings:
/// the differential pairs a generator at a_start with one at a_end.
struct CfkArrow {
    std::int64_t a_start;
    std::int64_t a_end;

    /// Positive length |a_end - a_start| / 2 of the arrow.
    std::int64_t delta() const {
        std::int64_t d = a_end - a_start;
        if (d < 0)
            d = -d;
        return d / 2;
    }
    std::int64_t a_top() const { return a_start > a_end ? a_start : a_end; }
    std::int64_t a_bot() const { return a_start > a_end ? a_end : a_start; }
};

/// Reduced knot Floer data: the cycle generator sits at doubled grading
/// 2 tau; each arrow contributes a cancelling pair. Primed pairs (which die
/// in homology) are not stored.
struct CfkData {
    std::string name;
    std::int64_t tau = 0;
    std::int64_t genus = 0;
    std::vector<CfkArrow> arrows;

    std::int64_t delta_sum() const {
        std::int64_t s = 0;
        for (const auto& a : arrows)
            s += a.delta();
        return s;
    }
    /// Unreduced-homology dimension 1 + 2 * #arrows (always odd).
    std::int64_t dim() const { return 1 + 2 * static_cast<std::int64_t>(arrows.size()); }
};

/// Empty iff the data is structurally valid; entries name broken constraints.
std::vector<std::string> validate_cfk(const CfkData& c);

}  // namespace csurg
