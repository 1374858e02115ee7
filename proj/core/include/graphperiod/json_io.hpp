#pragma once

#include <string>
#include <vector>

#include "graphperiod/criteria.hpp"
#include "graphperiod/symmetry.hpp"

namespace graphperiod {

// Serializers return pretty-printed JSON text (two-space indent).

// {"criterion", "graph", "p", "verdict", "violations": [{"monomial",
// "coefficient"}], "notes"}
std::string to_json(const CriterionReport& report);

// {"vertex_perm": [...], "edge_perm": [...]}
std::string to_json(const Automorphism& h);
std::string to_json(const std::vector<Automorphism>& hs);

// {"graph", "entries": [{"p", "excluded", "oracle", "reports": [...]}]}
std::string exclusion_to_json(const std::string& graph, const std::vector<ExclusionEntry>& entries);

// {"period", "vertex_orbits", "edge_orbits", "vertex_projection",
// "edge_projection", "quotient": {"n", "edges": [[a, b], ...]}}
std::string to_json(const QuotientMap& map);

// {"kind", "graph", "variables", "modulus" (or null), "folded", "polynomial"}
std::string polynomial_to_json(const std::string& kind, const std::string& graph, const Polynomial& poly,
                               std::uint32_t modulus, bool folded);

// Parses a criterion report back (used by tests and tooling).
CriterionReport criterion_report_from_json(const std::string& text);

}  // namespace graphperiod
