#include "csurg/surgery_model.hpp"

#include <algorithm>

namespace csurg {

std::string ModelGenerator::label() const {
    switch (kind) {
        case Kind::SPlus:
            return "d(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case Kind::SMinus:
            return "d*(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case Kind::Unstable:
            return "u(" + std::to_string(j) + ")";
    }
    return "?";
}

std::map<std::int64_t, std::int64_t> SurgeryModel::graded_dims() const {
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& g : basis)
        out[g.g2]++;
    return out;
}

int SurgeryModel::index_of(ModelGenerator::Kind kind, std::int64_t i, std::int64_t j) const {
    for (std::size_t idx = 0; idx < basis.size(); ++idx)
        if (basis[idx].kind == kind && basis[idx].i == i && basis[idx].j == j)
            return static_cast<int>(idx);
    return -1;
}

SurgeryModel build_surgery_model(const CfkData& c, std::int64_t m) {
    if (m == 0)
        throw DomainError("build_surgery_model: framing 0 is excluded");
    return sutured_model_basis(c, m);
}

SurgeryModel sutured_model_basis(const CfkData& c, std::int64_t m) {
    auto violations = validate_cfk(c);
    if (!violations.empty())
        throw DomainError("surgery model: invalid CFK data: " + violations.front());

    SurgeryModel model;
    model.framing = m;
    model.tau = c.tau;

    const std::int64_t two_tau = 2 * c.tau;
    for (std::size_t a = 0; a < c.arrows.size(); ++a) {
        const auto& arrow = c.arrows[a];
        for (std::int64_t j = 1; j <= arrow.delta(); ++j) {
            ModelGenerator g;
            g.kind = ModelGenerator::Kind::SPlus;
            g.i = static_cast<std::int64_t>(a) + 1;
            g.j = j;
            g.g2 = arrow.a_top() - 2 * (j - 1) - (m - 1);
            model.basis.push_back(g);
        }
    }
    for (std::size_t a = 0; a < c.arrows.size(); ++a) {
        const auto& arrow = c.arrows[a];
        for (std::int64_t j = 1; j <= arrow.delta(); ++j) {
            ModelGenerator g;
            g.kind = ModelGenerator::Kind::SMinus;
            g.i = static_cast<std::int64_t>(a) + 1;
            g.j = j;
            g.g2 = -(arrow.a_top() - 2 * (j - 1) - (m - 1)) + 4;
            model.basis.push_back(g);
        }
    }
    const std::int64_t unstable = two_tau > m ? two_tau - m : m - two_tau;
    for (std::int64_t l = 1; l <= unstable; ++l) {
        ModelGenerator g;
        g.kind = ModelGenerator::Kind::Unstable;
        g.i = 0;
        g.j = l;
        g.g2 = (m < two_tau) ? two_tau - 2 * (l - 1) - (m - 1)
                             : two_tau + 2 * (l - 1) - (m - 1);
        model.basis.push_back(g);
    }
    internal_assert(static_cast<std::int64_t>(model.basis.size()) ==
                        2 * c.delta_sum() + unstable,
                    "surgery model dimension law violated");
    return model;
}

StaircaseHomology staircase_oracle(const CfkData& c, std::int64_t m) {
    auto violations = validate_cfk(c);
    if (!violations.empty())
        throw DomainError("staircase_oracle: invalid CFK data: " + violations.front());
    if (m > -(4 * c.genus + 2))
        throw DomainError("staircase_oracle: framing must be <= -(4g + 2)");

    const std::int64_t copies = -m;

    // Per-copy generator gradings: index 0 = the cycle generator at 2 tau,
    // then bottom and top of each arrow. Ascending arrows (bottom as source)
    // are the only grading-consistent reading of the zone differentials.
    std::vector<std::int64_t> gens;
    gens.push_back(2 * c.tau);
    for (const auto& arrow : c.arrows) {
        gens.push_back(arrow.a_bot());
        gens.push_back(arrow.a_top());
    }
    const std::int64_t per_copy = static_cast<std::int64_t>(gens.size());

    // The grading mirror flips between copies m'/2 and m'/2 + 1.
    auto unmirrored = [&](std::int64_t i) { return 2 * i <= copies; };
    auto grading = [&](std::int64_t copy, std::int64_t a) {
        if (unmirrored(copy))
            return a - 2 * (copy - 1) - (m - 1);
        return -a - 2 * (copy - 1) - (m - 1);
    };

    const std::int64_t n_total = copies * per_copy;
    auto gid = [&](std::int64_t copy, std::int64_t k) { return (copy - 1) * per_copy + k; };

    std::vector<std::int64_t> g2(n_total);
    for (std::int64_t copy = 1; copy <= copies; ++copy)
        for (std::int64_t k = 0; k < per_copy; ++k)
            g2[gid(copy, k)] = grading(copy, gens[k]);

    // Partial-matching differential: source -> target, each generator in at
    // most one pair.
    std::vector<std::int64_t> target(n_total, -1);
    std::vector<bool> touched(n_total, false);
    auto add_arrow = [&](std::int64_t src, std::int64_t dst) {
        internal_assert(!touched[src] && !touched[dst], "staircase arrow collision");
        internal_assert(g2[src] == g2[dst], "staircase differential must preserve grading");
        target[src] = dst;
        touched[src] = touched[dst] = true;
    };

    // Boundary-zone arrows: bottom of copy i maps to top of copy i + delta
    // while both stay on the unmirrored side, and to top of copy i - delta
    // while both stay on the mirrored side. Pairs straddling the mirror are
    // left to the row completion below. Per arrow this kills every top copy
    // except the first delta and the last delta ones, which carry the stable
    // survivors.
    for (std::size_t i = 0; i < c.arrows.size(); ++i) {
        const std::int64_t delta = c.arrows[i].delta();
        const std::int64_t bot = 1 + 2 * static_cast<std::int64_t>(i);
        const std::int64_t top = bot + 1;
        for (std::int64_t copy = 1; copy <= copies; ++copy) {
            if (unmirrored(copy + delta))
                add_arrow(gid(copy, bot), gid(copy + delta, top));
            else if (copy - delta >= 1 && !unmirrored(copy - delta))
                add_arrow(gid(copy, bot), gid(copy - delta, top));
        }
    }

    // Complete the intermediate rows. A row is intermediate exactly when it
    // holds the full complement of d generators (one per homology class of
    // the base complex, counted with the mirror overlaps); boundary rows are
    // strictly smaller and keep all their free generators. Free generators
    // of an intermediate row are paired off from the second one on, sorted
    // by (copy, generator index), leaving a single survivor.
    std::map<std::int64_t, std::int64_t> row_size;
    for (std::int64_t id = 0; id < n_total; ++id)
        row_size[g2[id]]++;
    std::map<std::int64_t, std::vector<std::int64_t>> untouched_by_row;
    for (std::int64_t id = 0; id < n_total; ++id)
        if (!touched[id])
            untouched_by_row[g2[id]].push_back(id);
    for (auto& [row, ids] : untouched_by_row) {
        if (row_size[row] != c.dim() || ids.size() < 2)
            continue;
        internal_assert(ids.size() % 2 == 1,
                        "staircase intermediate row must hold an odd number of free generators");
        std::sort(ids.begin(), ids.end());
        for (std::size_t k = 1; k + 1 < ids.size(); k += 2)
            add_arrow(ids[k], ids[k + 1]);
    }

    // Square-zero check through the honest matrix.
    gf2::Matrix d(static_cast<int>(n_total), static_cast<int>(n_total));
    std::int64_t arrow_count = 0;
    for (std::int64_t id = 0; id < n_total; ++id)
        if (target[id] >= 0) {
            d.set(static_cast<int>(target[id]), static_cast<int>(id), true);
            ++arrow_count;
        }
    internal_assert((d * d).is_zero(), "staircase differential must square to zero");
    internal_assert(gf2::rank(d) == arrow_count, "staircase differential must be a matching");

    // Homology per row: generators minus the two ends of each arrow.
    std::map<std::int64_t, std::int64_t> hom;
    for (std::int64_t id = 0; id < n_total; ++id)
        hom[g2[id]]++;
    for (std::int64_t id = 0; id < n_total; ++id)
        if (target[id] >= 0)
            hom[g2[id]] -= 2;

    // Every intermediate row must come out with homology of rank one.
    for (const auto& [row, size] : row_size)
        if (size == c.dim())
            internal_assert(hom[row] == 1, "intermediate-row homology must be one-dimensional");

    StaircaseHomology out;
    for (const auto& [row, dim] : hom)
        if (dim > 0) {
            out.graded_dims[row] = dim;
            out.total += dim;
        }
    return out;
}

std::vector<std::vector<ModelGenerator>> spinc_partition(const SurgeryModel& model) {
    if (model.framing == 0)
        throw DomainError("spinc_partition: framing 0 is excluded");
    const std::int64_t mod = 2 * (model.framing < 0 ? -model.framing : model.framing);
    std::map<std::int64_t, std::vector<ModelGenerator>> classes;
    for (const auto& g : model.basis) {
        std::int64_t res = g.g2 % mod;
        if (res < 0)
            res += mod;
        classes[res].push_back(g);
    }
    std::vector<std::vector<ModelGenerator>> out;
    for (auto& [res, v] : classes)
        out.push_back(std::move(v));
    return out;
}

}  // namespace csurg
