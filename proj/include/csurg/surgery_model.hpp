#pragma once

#include <map>
#include <string>
#include <vector>

#include "csurg/cfk.hpp"
#include "csurg/gf2.hpp"

namespace csurg {

/// Labeled basis vector of the surgered-manifold knot Floer group:
/// d_{i,j} (SPlus), d*_{i,j} (SMinus) for arrow i and 1 <= j <= delta(i),
/// u_l (Unstable) for 1 <= l <= |2 tau - m|.
struct ModelGenerator {
    enum class Kind { SPlus, SMinus, Unstable };
    Kind kind;
    std::int64_t i = 0;  // arrow index (1-based), 0 for unstable
    std::int64_t j = 0;  // position in the arrow family, or the slot l
    std::int64_t g2 = 0; // doubled Alexander grading

    std::string label() const;
    bool operator==(const ModelGenerator& o) const {
        return kind == o.kind && i == o.i && j == o.j;
    }
};

/// Generator model of the knot Floer group of the m-surgered manifold.
///
/// Grading conventions (doubled):
///   G(d_{i,j})  = top(arrow i) - 2(j-1) - (m-1)
///   G(d*_{i,j}) = -G(d_{i,j}) + 4          (antisymmetric about 2)
///   G(u_l)      = 2 tau -+ 2(l-1) - (m-1)  (descending for m < 2 tau,
///                                           ascending for m > 2 tau)
/// These are the conventions the staircase construction realises; the
/// stabilisation maps are homogeneous of doubled degree +-1 with respect
/// to them at every framing.
struct SurgeryModel {
    std::int64_t framing = 0;
    std::int64_t tau = 0;
    std::vector<ModelGenerator> basis;

    std::size_t dim() const { return basis.size(); }
    std::map<std::int64_t, std::int64_t> graded_dims() const;
    /// Index of a generator in the basis order, -1 if absent.
    int index_of(ModelGenerator::Kind kind, std::int64_t i, std::int64_t j) const;
};

/// Build the model from CFK data at framing m != 0.
SurgeryModel build_surgery_model(const CfkData& c, std::int64_t m);

/// Same basis at any framing, including 0. The closed surgered manifold has
/// infinitely many Spin^c structures at framing 0, so build_surgery_model
/// rejects it, but the sutured groups (and the stabilisation maps between
/// them) are defined there and need the basis as matrix labels.
SurgeryModel sutured_model_basis(const CfkData& c, std::int64_t m);

/// The staircase complex over the two-element field: |m| copies of the CFK
/// complex stacked with shifted gradings, boundary-zone differentials, and a
/// canonical completion of the middle rows. Asserts square-zero and
/// one-dimensional middle-row homology; its graded homology dimensions are
/// the independent oracle for build_surgery_model.
struct StaircaseHomology {
    std::map<std::int64_t, std::int64_t> graded_dims;
    std::int64_t total = 0;
};

StaircaseHomology staircase_oracle(const CfkData& c, std::int64_t m);

/// Generators grouped by doubled grading mod 2m (same class = same Spin^c
/// structure). Requires m != 0.
std::vector<std::vector<ModelGenerator>> spinc_partition(const SurgeryModel& model);

}  // namespace csurg
