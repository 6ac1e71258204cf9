#pragma once

#include <map>
#include <string>

#include "csurg/cfk.hpp"
#include "csurg/knot_invariants.hpp"

namespace csurg {

/// Knot records plus optional CFK payloads, keyed by name. Loading validates
/// every record and the tau agreement between the two tables.
struct Catalog {
    std::map<std::string, KnotInvariants> knots;
    std::map<std::string, CfkData> cfk;

    const KnotInvariants& knot(const std::string& name) const;
    const CfkData& cfk_of(const std::string& name) const;
    bool has_cfk(const std::string& name) const { return cfk.count(name) > 0; }
};

/// The built-in catalog: unknot, trefoil (right-handed), trefoil_left,
/// figure8, 8_20, m10_125, m10_140; CFK data for the first four.
const Catalog& bundled_catalog();

/// Parse a catalog from its JSON text; throws DomainError on schema or
/// consistency problems.
Catalog parse_catalog(const std::string& json_text);

/// Read a catalog file from disk.
Catalog load_catalog(const std::string& path);

}  // namespace csurg
