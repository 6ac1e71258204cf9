// csurg: contact surgery calculus toolkit.
//
// Subcommands: expand, cable, slot, model, sigma, decide, tight, transverse,
// dims, verify. Human-readable text by default, machine JSON with --json.
// Exit codes: 0 success, 2 domain error, 3 lookup error, 4 internal
// cross-check failure.

#include <cstdlib>
#include <iostream>
#include <numeric>

#include <CLI11.hpp>
#include <json.hpp>

#include "csurg/bordered.hpp"
#include "csurg/catalog.hpp"
#include "csurg/ding_geiges.hpp"
#include "csurg/surgery_calculus.hpp"
#include "csurg/surgery_model.hpp"

using namespace csurg;
using nlohmann::json;

namespace {

struct Options {
    bool as_json = false;
    std::string catalog_path;
};

const Catalog& catalog(const Options& opt) {
    static Catalog loaded;
    static bool have_loaded = false;
    if (!opt.catalog_path.empty()) {
        if (!have_loaded) {
            loaded = load_catalog(opt.catalog_path);
            have_loaded = true;
        }
        return loaded;
    }
    if (const char* env = std::getenv("CSURG_CATALOG"); env && *env) {
        if (!have_loaded) {
            loaded = load_catalog(env);
            have_loaded = true;
        }
        return loaded;
    }
    return bundled_catalog();
}

json verdict_json(const Verdict& v) {
    json steps = json::array();
    for (const auto& s : v.trace)
        steps.push_back({{"rule", s.rule}, {"cite", s.cite}});
    return {{"verdict", v.value_str()}, {"trace", steps}};
}

void print_verdict(const Verdict& v, bool as_json) {
    if (as_json) {
        std::cout << verdict_json(v).dump(2) << "\n";
        return;
    }
    std::cout << v.value_str() << "\n";
    for (const auto& s : v.trace)
        std::cout << "  [" << s.rule << "] " << s.cite << "\n";
}

SignPlan parse_plan(const std::string& flat, const Rational& pq) {
    if (flat.empty())
        return SignPlan::negative();
    DgPresentation shape = dg_expand(pq);
    std::vector<std::vector<int>> signs;
    std::size_t pos = 0;
    for (std::int64_t count : shape.chain) {
        std::vector<int> row;
        for (std::int64_t i = 0; i < count; ++i) {
            if (pos >= flat.size())
                throw DomainError("sign plan too short: expected " +
                                  std::to_string(dg_total_stabilizations(shape)) + " signs");
            char c = flat[pos++];
            if (c != '+' && c != '-')
                throw DomainError("sign plan characters must be + or -");
            row.push_back(c == '+' ? +1 : -1);
        }
        signs.push_back(std::move(row));
    }
    if (pos != flat.size())
        throw DomainError("sign plan too long: expected " +
                          std::to_string(dg_total_stabilizations(shape)) + " signs");
    return SignPlan::explicit_signs(std::move(signs));
}

int cmd_expand(const Options& opt, const std::string& coeff, const std::string& plan) {
    Rational pq = Rational::parse(coeff);
    DgPresentation d = dg_expand(pq, plan.empty() ? SignPlan::negative() : parse_plan(plan, pq));
    if (opt.as_json) {
        json signs = json::array();
        for (const auto& row : d.signs)
            signs.push_back(row);
        std::cout << json{{"pq", d.coefficient.str()},
                          {"k", d.k},
                          {"chain", d.chain},
                          {"signs", signs}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "coefficient " << d.coefficient.str() << ": k = " << d.k << ", chain = [";
    for (std::size_t i = 0; i < d.chain.size(); ++i)
        std::cout << (i ? ", " : "") << d.chain[i];
    std::cout << "], stabilisations = " << dg_total_stabilizations(d) << "\n";
    return 0;
}

int cmd_cable(const Options& opt, const std::string& name, std::int64_t tb, std::int64_t r,
              std::int64_t m, std::int64_t n) {
    LegendrianClass l{catalog(opt).knot(name), tb, r};
    LegendrianClass c = cable(l, m, n);
    if (opt.as_json) {
        std::cout << json{{"knot", c.knot.name},
                          {"tb", c.tb},
                          {"r", c.r},
                          {"tau", c.knot.tau},
                          {"nu", c.knot.nu},
                          {"epsilon", c.knot.epsilon}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << c.knot.name << ": tb = " << c.tb << ", r = " << c.r << ", tau = " << c.knot.tau
              << ", nu = " << c.knot.nu << ", epsilon = " << c.knot.epsilon << "\n";
    return 0;
}

int cmd_slot(const Options& opt, const std::string& name, std::int64_t tb, std::int64_t r,
             const std::string& sign) {
    LegendrianClass l{catalog(opt).knot(name), tb, r};
    EhSlot s = eh_slot(l, sign == "plus" ? Sign::Plus : Sign::Minus);
    if (opt.as_json) {
        json out = s.stable ? json{{"slot", "stable"}} : json{{"slot", s.slot}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (s.stable)
        std::cout << "stable\n";
    else
        std::cout << "slot " << s.slot << "\n";
    return 0;
}

int cmd_model(const Options& opt, const std::string& name, std::int64_t framing) {
    const auto& c = catalog(opt).cfk_of(name);
    SurgeryModel m = build_surgery_model(c, framing);
    if (opt.as_json) {
        json basis = json::array();
        for (const auto& g : m.basis)
            basis.push_back({{"label", g.label()}, {"g2", g.g2}});
        json classes = json::array();
        for (const auto& cl : spinc_partition(m)) {
            json names = json::array();
            for (const auto& g : cl)
                names.push_back(g.label());
            classes.push_back(names);
        }
        std::cout << json{{"knot", name},
                          {"framing", framing},
                          {"dim", m.dim()},
                          {"basis", basis},
                          {"spinc", classes}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << name << " at framing " << framing << ": " << m.dim() << " generators\n";
    for (const auto& g : m.basis)
        std::cout << "  " << g.label() << "  g2 = " << g.g2 << "\n";
    std::cout << "spin-c classes: " << spinc_partition(m).size() << "\n";
    return 0;
}

json matrix_json(const gf2::Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        std::string row;
        for (int c = 0; c < m.cols(); ++c)
            row += m.get(r, c) ? '1' : '0';
        rows.push_back(row);
    }
    return rows;
}

int cmd_sigma(const Options& opt, const std::string& name, std::int64_t framing, bool compare) {
    const auto& c = catalog(opt).cfk_of(name);
    SigmaPair closed = closed_form_sigma(c, framing);
    bool match = true;
    if (compare) {
        SigmaPair derived = derive_sigma(c, framing);
        match = derived.minus == closed.minus && derived.plus == closed.plus;
    }
    if (opt.as_json) {
        json out{{"knot", name},
                 {"framing", framing},
                 {"dim_from", closed.domain.dim()},
                 {"dim_to", closed.codomain.dim()},
                 {"sigma_minus", matrix_json(closed.minus)},
                 {"sigma_plus", matrix_json(closed.plus)}};
        if (compare)
            out["compare"] = match ? "MATCH" : "MISMATCH";
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << name << ": sigma maps from framing " << framing << " to " << framing - 1
                  << " (" << closed.domain.dim() << " -> " << closed.codomain.dim() << ")\n";
        if (compare)
            std::cout << (match ? "MATCH" : "MISMATCH")
                      << " between the closed form and the bordered derivation\n";
    }
    if (compare && !match)
        throw InternalAssertionError("sigma comparison mismatch");
    return 0;
}

int cmd_decide(const Options& opt, const std::string& name, std::int64_t tb, std::int64_t r,
               const std::string& coeff, const std::string& variant, const std::string& plan,
               bool overtwisted) {
    LegendrianClass l{catalog(opt).knot(name), tb, r};
    Rational pq = Rational::parse(coeff);
    Ambient ambient = overtwisted ? Ambient::Overtwisted : Ambient::Standard;
    Verdict v;
    if (pq.is_integer() && !pq.is_infinite() && plan.empty() && Rational(0) < pq) {
        Sign s = variant == "plus" ? Sign::Plus : Sign::Minus;
        v = decide_integer(l, pq.num(), s, ambient);
    } else {
        v = decide_rational(l, pq, plan.empty() ? SignPlan::negative() : parse_plan(plan, pq),
                            ambient);
    }
    print_verdict(v, opt.as_json);
    return 0;
}

int cmd_tight(const Options& opt, const std::string& name, const std::string& coeff) {
    const auto& k = catalog(opt).knot(name);
    TightAnswer a = tight_exists(k, Rational::parse(coeff));
    const char* s = a == TightAnswer::Yes ? "yes" : "unknown";
    if (opt.as_json)
        std::cout << json{{"tight", s}}.dump(2) << "\n";
    else
        std::cout << s << "\n";
    return 0;
}

int cmd_transverse(const Options& opt, const std::string& name, std::int64_t sl, bool overtwisted) {
    const auto& k = catalog(opt).knot(name);
    print_verdict(transverse_nonzero(k, sl, !overtwisted), opt.as_json);
    return 0;
}

int cmd_dims(const Options& opt, const std::string& name, std::int64_t f) {
    const auto& k = catalog(opt).knot(name);
    if (!k.hf_d)
        throw LookupError("knot '" + name + "' has no recorded dimension constant");
    std::int64_t dim = hf_hat_dim(k.nu, *k.hf_d, f);
    const char* rank =
        cobordism_rank_rule(k.nu, f) == CobordismRank::Injective ? "injective" : "zero";
    if (opt.as_json)
        std::cout << json{{"dim", dim}, {"cobordism", rank}}.dump(2) << "\n";
    else
        std::cout << "dim = " << dim << ", cobordism map " << rank << "\n";
    return 0;
}

int cmd_verify(const Options& opt, const std::string& grid) {
    if (grid != "default")
        throw DomainError("unknown grid: '" + grid + "'");
    std::int64_t checked = 0, failures = 0;

    // Model against the staircase oracle on the bundled data.
    for (const auto& [name, c] : catalog(opt).cfk) {
        for (std::int64_t m = -20; m <= -(4 * c.genus + 2); ++m) {
            ++checked;
            if (staircase_oracle(c, m).graded_dims != build_surgery_model(c, m).graded_dims())
                ++failures;
        }
        for (std::int64_t n = -10; n <= 2 * c.tau + 5; ++n) {
            ++checked;
            SigmaPair d = derive_sigma(c, n);
            SigmaPair cl = closed_form_sigma(c, n);
            if (!(d.minus == cl.minus && d.plus == cl.plus))
                ++failures;
        }
    }

    // Evaluator against the closed form on the standard grid.
    for (std::int64_t tau = -3; tau <= 3; ++tau)
        for (std::int64_t eps : {-1, 0, 1}) {
            if (eps == 0 && tau != 0)
                continue;
            KnotInvariants k;
            k.name = "grid";
            k.tau = tau;
            k.epsilon = eps;
            k.nu = nu_from_tau_epsilon(tau, eps);
            for (std::int64_t tb = 2 * tau - 9; tb <= 2 * tau - 1; ++tb)
                for (std::int64_t r = -10; r <= 10; ++r) {
                    if ((tb - r) % 2 == 0 || tb - r > 2 * tau - 1 || tb + r > 2 * tau - 1)
                        continue;
                    LegendrianClass l{k, tb, r};
                    for (std::int64_t n = 1; n <= 12; ++n) {
                        ++checked;
                        bool closed = (tb - r == 2 * tau - 1) && (n + tb >= 2 * tau) && (tau == k.nu);
                        if (psi_eval(eh_slot(l, Sign::Minus), tb, n, tau, k.nu, eps).nonzero() !=
                            closed)
                            ++failures;
                    }
                }
        }

    if (opt.as_json)
        std::cout << json{{"checked", checked}, {"failures", failures}}.dump(2) << "\n";
    else
        std::cout << checked << " checks, " << failures << " failures\n";
    if (failures > 0)
        throw InternalAssertionError("verification grid reported failures");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"contact surgery calculus toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.as_json, "emit machine-readable JSON");
    app.add_option("--catalog", opt.catalog_path, "catalog file (default: bundled, or CSURG_CATALOG)");

    std::string coeff, plan, name, sign = "minus", variant = "minus", grid = "default";
    std::int64_t tb = 0, r = 0, m = 0, n = 0, framing = 0, sl = 0, f = 0;
    bool compare = false, overtwisted = false;

    auto* c_expand = app.add_subcommand("expand", "surgery presentation of a coefficient");
    c_expand->add_option("coefficient", coeff)->required();
    c_expand->add_option("--signs", plan, "flattened stabilisation signs, e.g. '-+-'");

    auto* c_cable = app.add_subcommand("cable", "classical invariants of a Legendrian cable");
    c_cable->add_option("knot", name)->required();
    c_cable->add_option("tb", tb)->required();
    c_cable->add_option("r", r)->required();
    c_cable->add_option("m", m)->required();
    c_cable->add_option("n", n)->required();

    auto* c_slot = app.add_subcommand("slot", "unstable slot of the Legendrian invariant");
    c_slot->add_option("knot", name)->required();
    c_slot->add_option("tb", tb)->required();
    c_slot->add_option("r", r)->required();
    c_slot->add_option("--sign", sign)->check(CLI::IsMember({"minus", "plus"}));

    auto* c_model = app.add_subcommand("model", "surgered-manifold Floer model");
    c_model->add_option("knot", name)->required();
    c_model->add_option("framing", framing)->required();

    auto* c_sigma = app.add_subcommand("sigma", "stabilisation maps at a framing");
    c_sigma->add_option("knot", name)->required();
    c_sigma->add_option("framing", framing)->required();
    c_sigma->add_flag("--compare", compare, "check against the bordered derivation");

    auto* c_decide = app.add_subcommand("decide", "(non)vanishing of the contact invariant");
    c_decide->add_option("knot", name)->required();
    c_decide->add_option("tb", tb)->required();
    c_decide->add_option("r", r)->required();
    c_decide->add_option("coefficient", coeff)->required();
    c_decide->add_option("--variant", variant)->check(CLI::IsMember({"minus", "plus"}));
    c_decide->add_option("--signs", plan, "flattened stabilisation signs");
    c_decide->add_flag("--overtwisted", overtwisted, "ambient structure is overtwisted");

    auto* c_tight = app.add_subcommand("tight", "tightness certificate for a surgered sphere");
    c_tight->add_option("knot", name)->required();
    c_tight->add_option("coefficient", coeff)->required();

    auto* c_trans = app.add_subcommand("transverse", "transverse invariant nonvanishing");
    c_trans->add_option("knot", name)->required();
    c_trans->add_option("sl", sl)->required();
    c_trans->add_flag("--overtwisted", overtwisted);

    auto* c_dims = app.add_subcommand("dims", "Floer rank of a surgered sphere");
    c_dims->add_option("knot", name)->required();
    c_dims->add_option("framing", f)->required();

    auto* c_verify = app.add_subcommand("verify", "run the verification sweeps");
    c_verify->add_option("--grid", grid);

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_expand->parsed())
            return cmd_expand(opt, coeff, plan);
        if (c_cable->parsed())
            return cmd_cable(opt, name, tb, r, m, n);
        if (c_slot->parsed())
            return cmd_slot(opt, name, tb, r, sign);
        if (c_model->parsed())
            return cmd_model(opt, name, framing);
        if (c_sigma->parsed())
            return cmd_sigma(opt, name, framing, compare);
        if (c_decide->parsed())
            return cmd_decide(opt, name, tb, r, coeff, variant, plan, overtwisted);
        if (c_tight->parsed())
            return cmd_tight(opt, name, coeff);
        if (c_trans->parsed())
            return cmd_transverse(opt, name, sl, overtwisted);
        if (c_dims->parsed())
            return cmd_dims(opt, name, f);
        if (c_verify->parsed())
            return cmd_verify(opt, grid);
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const LookupError& e) {
        std::cerr << "lookup error: " << e.what() << "\n";
        return 3;
    } catch (const InternalAssertionError& e) {
        std::cerr << "internal assertion: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
