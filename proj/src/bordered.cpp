#include "csurg/bordered.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace csurg {

std::string dlabel_str(DLabel l) {
    switch (l) {
        case DLabel::D1: return "D1";
        case DLabel::D2: return "D2";
        case DLabel::D3: return "D3";
        case DLabel::D12: return "D12";
        case DLabel::D23: return "D23";
        case DLabel::D123: return "D123";
    }
    return "?";
}

int TypeDStructure::count_idem(int idem) const {
    int n = 0;
    for (const auto& g : gens)
        if (g.idem == idem)
            ++n;
    return n;
}

namespace {

// Doubled model gradings at arbitrary framing; iota1 generators carry the
// negatives (they are dual to the model generators).
std::int64_t g2_d(const CfkArrow& a, std::int64_t j, std::int64_t n) {
    return a.a_top() - 2 * (j - 1) - (n - 1);
}
std::int64_t g2_u(std::int64_t tau, std::int64_t k, std::int64_t n) {
    return (n < 2 * tau) ? 2 * tau - 2 * (k - 1) - (n - 1)
                         : 2 * tau + 2 * (k - 1) - (n - 1);
}

}  // namespace

TypeDStructure build_cfd(const CfkData& c, std::int64_t framing) {
    auto violations = validate_cfk(c);
    if (!violations.empty())
        throw DomainError("build_cfd: invalid CFK data: " + violations.front());

    TypeDStructure v;
    v.framing = framing;
    v.tau = c.tau;

    auto add_gen = [&](const std::string& id, int idem, std::int64_t g2) {
        v.gens.push_back({id, idem, g2});
        return static_cast<int>(v.gens.size()) - 1;
    };

    // iota0: the cycle generator, then the two ends of each arrow.
    v.xi0 = add_gen("x0", 0, 2 * c.tau);
    v.v0.push_back(v.xi0);
    for (std::size_t i = 0; i < c.arrows.size(); ++i) {
        int s = add_gen("x" + std::to_string(2 * i + 1), 0, c.arrows[i].a_start);
        int e = add_gen("x" + std::to_string(2 * i + 2), 0, c.arrows[i].a_end);
        v.v0.push_back(s);
        v.v0.push_back(e);
        v.vert_pairs.emplace_back(s, e);
    }

    // Grading-mirror involution on the iota0 generators pairs the two
    // simplified bases: the horizontal chain of an arrow runs between the
    // mirrors of its endpoints.
    std::vector<int> order = v.v0;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return v.gens[a].g2 < v.gens[b].g2 || (v.gens[a].g2 == v.gens[b].g2 && a < b);
    });
    std::vector<int> mirror(v.gens.size(), -1);
    for (std::size_t t = 0; t < order.size(); ++t)
        mirror[order[t]] = order[order.size() - 1 - t];
    v.eta0 = mirror[v.xi0];
    for (const auto& [s, e] : v.vert_pairs)
        v.horiz_pairs.emplace_back(mirror[s], mirror[e]);

    auto add_arrow = [&](int from, int to, DLabel l) { v.arrows.push_back({from, to, l}); };

    // Stable chains, one kappa and one lambda string of length delta per arrow.
    for (std::size_t i = 0; i < c.arrows.size(); ++i) {
        const std::int64_t delta = c.arrows[i].delta();
        std::vector<int> ks, ls;
        for (std::int64_t j = 1; j <= delta; ++j)
            ks.push_back(add_gen("k" + std::to_string(i + 1) + "_" + std::to_string(j), 1,
                                 -g2_d(c.arrows[i], j, framing)));
        for (std::int64_t j = 1; j <= delta; ++j)
            ls.push_back(add_gen("l" + std::to_string(i + 1) + "_" + std::to_string(j), 1,
                                 -(-g2_d(c.arrows[i], j, framing) + 4)));
        const auto [vs, ve] = v.vert_pairs[i];
        add_arrow(vs, ks[0], DLabel::D1);
        for (std::int64_t j = 0; j + 1 < delta; ++j)
            add_arrow(ks[j + 1], ks[j], DLabel::D23);
        add_arrow(ve, ks[delta - 1], DLabel::D123);
        const auto [hs, he] = v.horiz_pairs[i];
        add_arrow(hs, ls[0], DLabel::D3);
        for (std::int64_t j = 0; j + 1 < delta; ++j)
            add_arrow(ls[j], ls[j + 1], DLabel::D23);
        add_arrow(ls[delta - 1], he, DLabel::D2);
        v.kappa.push_back(std::move(ks));
        v.lambda.push_back(std::move(ls));
    }

    // Unstable chain, shaped by the framing relative to 2 tau.
    const std::int64_t two_tau = 2 * c.tau;
    if (framing < two_tau) {
        const std::int64_t len = two_tau - framing;
        for (std::int64_t k = 1; k <= len; ++k)
            v.mu.push_back(add_gen("mu" + std::to_string(k), 1, -g2_u(c.tau, k, framing)));
        add_arrow(v.xi0, v.mu[0], DLabel::D1);
        for (std::int64_t k = 0; k + 1 < len; ++k)
            add_arrow(v.mu[k + 1], v.mu[k], DLabel::D23);
        add_arrow(v.eta0, v.mu[len - 1], DLabel::D3);
    } else if (framing == two_tau) {
        add_arrow(v.xi0, v.eta0, DLabel::D12);
    } else {
        const std::int64_t len = framing - two_tau;
        for (std::int64_t k = 1; k <= len; ++k)
            v.mu.push_back(add_gen("mu" + std::to_string(k), 1, -g2_u(c.tau, k, framing)));
        add_arrow(v.xi0, v.mu[0], DLabel::D123);
        for (std::int64_t k = 0; k + 1 < len; ++k)
            add_arrow(v.mu[k], v.mu[k + 1], DLabel::D23);
        add_arrow(v.mu[len - 1], v.eta0, DLabel::D2);
    }
    return v;
}

std::string type_d_dump(const TypeDStructure& v) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : v.gens)
        gens.push_back({{"id", g.id}, {"idem", g.idem}, {"g2", g.g2}});
    nlohmann::json arrows = nlohmann::json::array();
    for (const auto& a : v.arrows)
        arrows.push_back({{"from", v.gens[static_cast<std::size_t>(a.from)].id},
                          {"to", v.gens[static_cast<std::size_t>(a.to)].id},
                          {"label", dlabel_str(a.label)}});
    return nlohmann::json{{"gens", gens}, {"arrows", arrows}}.dump(2);
}

namespace {

struct BoxIndex {
    // Positions of the iota0/iota1 generators inside the W bases.
    std::vector<int> p_of_gen;   // gen index -> W0 position of p.x (iota0 only)
    std::vector<int> s_of_gen;   // gen index -> W0 position of s.v (iota1 only)
    std::vector<int> q_of_gen;   // gen index -> W1 position of q.v (iota1 only)
};

BoxIndex make_index(const TypeDStructure& v, BoxTensorComplex& w) {
    BoxIndex ix;
    ix.p_of_gen.assign(v.gens.size(), -1);
    ix.s_of_gen.assign(v.gens.size(), -1);
    ix.q_of_gen.assign(v.gens.size(), -1);
    for (int g : v.v0) {
        ix.p_of_gen[g] = static_cast<int>(w.w0_labels.size());
        w.w0_labels.push_back("p." + v.gens[g].id);
    }
    std::vector<int> v1_order;
    for (const auto& ks : v.kappa)
        v1_order.insert(v1_order.end(), ks.begin(), ks.end());
    for (const auto& ls : v.lambda)
        v1_order.insert(v1_order.end(), ls.begin(), ls.end());
    v1_order.insert(v1_order.end(), v.mu.begin(), v.mu.end());
    for (int g : v1_order) {
        ix.s_of_gen[g] = static_cast<int>(w.w0_labels.size());
        w.w0_labels.push_back("s." + v.gens[g].id);
        ix.q_of_gen[g] = static_cast<int>(w.w1_labels.size());
        w.w1_labels.push_back("q." + v.gens[g].id);
    }
    return ix;
}

}  // namespace

int BoxTensorComplex::homology_dim_w0() const {
    return dim_w0() - 2 * gf2::rank(d_w0);
}

int BoxTensorComplex::homology_dim_w1() const {
    return dim_w1();  // the differential on W1 is q x (D^V y) = 0
}

BoxTensorComplex box_tensor_tau_lambda(const TypeDStructure& v, D1Candidate candidate) {
    BoxTensorComplex w;
    w.framing = v.framing;
    BoxIndex ix = make_index(v, w);

    w.d_w0 = gf2::Matrix(w.dim_w0(), w.dim_w0());
    w.d1 = gf2::Matrix(w.dim_w1(), w.dim_w0());
    w.d3 = gf2::Matrix(w.dim_w1(), w.dim_w0());

    // Differential: the only contribution is s x y -> p x (D2 y).
    for (const auto& a : v.arrows)
        if (a.label == DLabel::D2)
            w.d_w0.set(ix.p_of_gen[a.to], ix.s_of_gen[a.from], true);

    // D1: displayed form forwards the s-component identically; the rejected
    // alternative pushes the p-component through the complement's D1.
    if (candidate == D1Candidate::ForwardV1) {
        for (std::size_t g = 0; g < v.gens.size(); ++g)
            if (ix.s_of_gen[g] >= 0)
                w.d1.set(ix.q_of_gen[g], ix.s_of_gen[g], true);
    } else {
        for (const auto& a : v.arrows)
            if (a.label == DLabel::D1)
                w.d1.set(ix.q_of_gen[a.to], ix.p_of_gen[a.from], true);
    }

    // D3: p x x -> q x (D3 x), s x y -> q x (D23 y).
    for (const auto& a : v.arrows) {
        if (a.label == DLabel::D3)
            w.d3.set(ix.q_of_gen[a.to], ix.p_of_gen[a.from], true);
        else if (a.label == DLabel::D23)
            w.d3.set(ix.q_of_gen[a.to], ix.s_of_gen[a.from], true);
    }

    internal_assert((w.d_w0 * w.d_w0).is_zero(), "box tensor differential must square to zero");
    return w;
}

namespace {

const std::vector<int>* chain_for(const TypeDStructure& v, const ModelGenerator& g) {
    switch (g.kind) {
        case ModelGenerator::Kind::SPlus:
            return &v.kappa[static_cast<std::size_t>(g.i - 1)];
        case ModelGenerator::Kind::SMinus:
            return &v.lambda[static_cast<std::size_t>(g.i - 1)];
        case ModelGenerator::Kind::Unstable:
            return &v.mu;
    }
    return nullptr;
}

}  // namespace

SigmaPair closed_form_sigma(const CfkData& c, std::int64_t n) {
    SigmaPair out;
    out.domain = sutured_model_basis(c, n);
    out.codomain = sutured_model_basis(c, n - 1);
    const int rows = static_cast<int>(out.codomain.dim());
    const int cols = static_cast<int>(out.domain.dim());
    out.minus = gf2::Matrix(rows, cols);
    out.plus = gf2::Matrix(rows, cols);

    const std::int64_t two_tau = 2 * c.tau;
    auto delta_of = [&](std::int64_t i) { return c.arrows[static_cast<std::size_t>(i - 1)].delta(); };

    for (int col = 0; col < cols; ++col) {
        const auto& g = out.domain.basis[static_cast<std::size_t>(col)];
        auto hit = [&](gf2::Matrix& m, ModelGenerator::Kind kind, std::int64_t i, std::int64_t j) {
            int row = out.codomain.index_of(kind, i, j);
            internal_assert(row >= 0, "closed-form sigma image outside the codomain basis");
            m.set(row, col, true);
        };
        switch (g.kind) {
            case ModelGenerator::Kind::SPlus:
                hit(out.minus, g.kind, g.i, g.j);
                if (g.j + 1 <= delta_of(g.i))
                    hit(out.plus, g.kind, g.i, g.j + 1);
                break;
            case ModelGenerator::Kind::SMinus:
                if (g.j + 1 <= delta_of(g.i))
                    hit(out.minus, g.kind, g.i, g.j + 1);
                hit(out.plus, g.kind, g.i, g.j);
                break;
            case ModelGenerator::Kind::Unstable:
                if (n <= two_tau) {
                    hit(out.minus, g.kind, 0, g.j);
                    hit(out.plus, g.kind, 0, g.j + 1);
                } else {
                    if (g.j != n - two_tau)
                        hit(out.minus, g.kind, 0, g.j);
                    if (g.j != 1)
                        hit(out.plus, g.kind, 0, g.j - 1);
                }
                break;
        }
    }
    return out;
}

SigmaPair derive_sigma(const CfkData& c, std::int64_t n, D1Candidate candidate) {
    TypeDStructure v = build_cfd(c, n);
    BoxTensorComplex w = box_tensor_tau_lambda(v, candidate);

    // The coefficient maps must descend to (co)homology.
    internal_assert((w.d1 * w.d_w0).is_zero(),
                    "D1 coefficient map is not a chain map for this candidate");
    internal_assert((w.d3 * w.d_w0).is_zero(),
                    "D3 coefficient map is not a chain map for this candidate");

    const BoxFramings bf = box_framings(n);
    SigmaPair out;
    out.domain = sutured_model_basis(c, bf.w1_model);
    out.codomain = sutured_model_basis(c, bf.w0_model);
    internal_assert(static_cast<int>(out.domain.dim()) == w.dim_w1(),
                    "W1 must match the model at the surgery framing");
    internal_assert(static_cast<int>(out.codomain.dim()) == w.homology_dim_w0(),
                    "H(W0) must match the model one framing down");

    const int n0 = w.dim_w0();
    BoxTensorComplex dummy;  // reindex to address unit duals
    BoxIndex ix = make_index(v, dummy);

    auto unit = [&](int pos) {
        std::vector<bool> e(static_cast<std::size_t>(n0), false);
        e[static_cast<std::size_t>(pos)] = true;
        return e;
    };

    // Dictionary representatives for the codomain classes in the dual of W0.
    const std::int64_t two_tau = 2 * c.tau;
    std::vector<std::vector<bool>> reps;
    for (const auto& g : out.codomain.basis) {
        switch (g.kind) {
            case ModelGenerator::Kind::SPlus:
                reps.push_back(unit(ix.s_of_gen[v.kappa[static_cast<std::size_t>(g.i - 1)]
                                                       [static_cast<std::size_t>(g.j - 1)]]));
                break;
            case ModelGenerator::Kind::SMinus:
                if (g.j == 1)
                    reps.push_back(unit(ix.p_of_gen[v.horiz_pairs[static_cast<std::size_t>(g.i - 1)].first]));
                else
                    reps.push_back(unit(ix.s_of_gen[v.lambda[static_cast<std::size_t>(g.i - 1)]
                                                           [static_cast<std::size_t>(g.j - 2)]]));
                break;
            case ModelGenerator::Kind::Unstable:
                if (n <= two_tau) {
                    if (g.j <= two_tau - n)
                        reps.push_back(unit(ix.s_of_gen[v.mu[static_cast<std::size_t>(g.j - 1)]]));
                    else
                        reps.push_back(unit(ix.p_of_gen[v.eta0]));
                } else {
                    reps.push_back(unit(ix.s_of_gen[v.mu[static_cast<std::size_t>(g.j - 1)]]));
                }
                break;
        }
    }

    // Cocycle check and the coboundary subspace of the dual complex.
    gf2::Matrix delta0 = w.d_w0.transpose();
    for (const auto& r : reps) {
        auto im = delta0.apply(r);
        bool zero = true;
        for (bool b : im)
            zero = zero && !b;
        internal_assert(zero, "dictionary representative is not a cocycle");
    }
    std::vector<std::vector<bool>> cobs;
    for (int u = 0; u < n0; ++u) {
        auto b = delta0.apply(unit(u));
        bool zero = true;
        for (bool bit : b)
            zero = zero && !bit;
        if (!zero)
            cobs.push_back(std::move(b));
    }
    {
        std::vector<std::vector<bool>> all = reps;
        all.insert(all.end(), cobs.begin(), cobs.end());
        internal_assert(gf2::rank_of_vectors(all) ==
                            static_cast<int>(reps.size()) + gf2::rank_of_vectors(cobs),
                        "dictionary classes must be independent modulo coboundaries");
    }

    std::vector<std::vector<bool>> span = reps;
    span.insert(span.end(), cobs.begin(), cobs.end());

    const int rows = static_cast<int>(out.codomain.dim());
    const int cols = static_cast<int>(out.domain.dim());
    out.minus = gf2::Matrix(rows, cols);
    out.plus = gf2::Matrix(rows, cols);

    gf2::Matrix d1t = w.d1.transpose();
    gf2::Matrix d3t = w.d3.transpose();

    for (int col = 0; col < cols; ++col) {
        const auto& g = out.domain.basis[static_cast<std::size_t>(col)];
        const auto* chain = chain_for(v, g);
        int gen = (*chain)[static_cast<std::size_t>(g.j - 1)];
        std::vector<bool> e1(static_cast<std::size_t>(w.dim_w1()), false);
        e1[static_cast<std::size_t>(ix.q_of_gen[gen])] = true;

        for (int which = 0; which < 2; ++which) {
            auto vec = (which == 0 ? d1t : d3t).apply(e1);
            auto sol = gf2::solve_in_span(span, vec);
            internal_assert(sol.has_value(), "adjoint image escapes the identified classes");
            for (int row = 0; row < rows; ++row)
                if ((*sol)[static_cast<std::size_t>(row)])
                    (which == 0 ? out.minus : out.plus).set(row, col, true);
        }
    }
    return out;
}

}  // namespace csurg
