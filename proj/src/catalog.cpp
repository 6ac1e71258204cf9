#include "csurg/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace csurg {

namespace {

// Built-in records. 8_20 and m10_140 are slice, which pins tau = nu = 0 on
// both orientations and hence epsilon = 0.
const char* kBundledJson = R"JSON({
  "knots": [
    {"name": "unknot", "tau": 0, "nu": 0, "epsilon": 0,
     "genus": 0, "slice_genus": 0, "tb_max": -1, "sl_max": -1, "hf_d": 0},
    {"name": "trefoil", "tau": 1, "nu": 1, "epsilon": 1,
     "genus": 1, "slice_genus": 1, "tb_max": 1, "sl_max": 1, "hf_d": 0},
    {"name": "trefoil_left", "tau": -1, "nu": 0, "epsilon": -1,
     "genus": 1, "slice_genus": 1, "tb_max": null, "sl_max": null, "hf_d": null},
    {"name": "figure8", "tau": 0, "nu": 0, "epsilon": 0,
     "genus": 1, "slice_genus": 1, "tb_max": -3, "sl_max": -3, "hf_d": null},
    {"name": "8_20", "tau": 0, "nu": 0, "epsilon": 0,
     "genus": 1, "slice_genus": 0, "tb_max": -2, "sl_max": -1, "hf_d": null},
    {"name": "m10_125", "tau": -1, "nu": 0, "epsilon": -1,
     "genus": null, "slice_genus": 1, "tb_max": null, "sl_max": -3, "hf_d": null},
    {"name": "m10_140", "tau": 0, "nu": 0, "epsilon": 0,
     "genus": null, "slice_genus": 0, "tb_max": -1, "sl_max": -1, "hf_d": null}
  ],
  "cfk": {
    "unknot":       {"tau": 0,  "genus": 0, "arrows": []},
    "trefoil":      {"tau": 1,  "genus": 1, "arrows": [[0, -2]]},
    "trefoil_left": {"tau": -1, "genus": 1, "arrows": [[2, 0]]},
    "figure8":      {"tau": 0,  "genus": 1, "arrows": [[2, 0], [0, -2]]}
  }
})JSON";

std::optional<std::int64_t> opt_int(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null())
        return std::nullopt;
    return j.at(key).get<std::int64_t>();
}

}  // namespace

const KnotInvariants& Catalog::knot(const std::string& name) const {
    auto it = knots.find(name);
    if (it == knots.end())
        throw LookupError("unknown knot: '" + name + "'");
    return it->second;
}

const CfkData& Catalog::cfk_of(const std::string& name) const {
    auto it = cfk.find(name);
    if (it == cfk.end())
        throw LookupError("no CFK data for knot: '" + name + "'");
    return it->second;
}

Catalog parse_catalog(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("catalog: bad JSON: ") + e.what());
    }

    Catalog cat;
    try {
        for (const auto& jk : j.at("knots")) {
            KnotInvariants k;
            k.name = jk.at("name").get<std::string>();
            k.tau = jk.at("tau").get<std::int64_t>();
            k.nu = jk.at("nu").get<std::int64_t>();
            k.epsilon = jk.at("epsilon").get<std::int64_t>();
            k.genus = opt_int(jk, "genus");
            k.slice_genus = opt_int(jk, "slice_genus");
            k.tb_max = opt_int(jk, "tb_max");
            k.sl_max = opt_int(jk, "sl_max");
            k.hf_d = opt_int(jk, "hf_d");
            auto violations = validate(k);
            if (!violations.empty())
                throw DomainError("catalog: knot '" + k.name +
                                  "' is inconsistent: " + violations.front());
            cat.knots[k.name] = k;
        }
        if (j.contains("cfk")) {
            for (auto it = j.at("cfk").begin(); it != j.at("cfk").end(); ++it) {
                CfkData c;
                c.name = it.key();
                c.tau = it.value().at("tau").get<std::int64_t>();
                c.genus = it.value().at("genus").get<std::int64_t>();
                for (const auto& ja : it.value().at("arrows"))
                    c.arrows.push_back({ja.at(0).get<std::int64_t>(), ja.at(1).get<std::int64_t>()});
                auto violations = validate_cfk(c);
                if (!violations.empty())
                    throw DomainError("catalog: CFK data '" + c.name +
                                      "' is inconsistent: " + violations.front());
                auto kn = cat.knots.find(c.name);
                if (kn != cat.knots.end() && kn->second.tau != c.tau)
                    throw DomainError("catalog: tau mismatch between tables for '" + c.name + "'");
                cat.cfk[c.name] = c;
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("catalog: schema error: ") + e.what());
    }
    return cat;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DomainError("catalog: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_catalog(ss.str());
}

const Catalog& bundled_catalog() {
    static const Catalog cat = parse_catalog(kBundledJson);
    return cat;
}

}  // namespace csurg
