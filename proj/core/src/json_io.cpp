#include "graphperiod/json_io.hpp"

#include <json.hpp>

namespace graphperiod {

namespace {

using json = nlohmann::ordered_json;

json coefficient_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return c.convert_to<std::int64_t>();
  }
  return c.str();
}

json report_json(const CriterionReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"monomial", v.monomial}, {"coefficient", coefficient_json(v.coefficient)}});
  }
  return {{"criterion", report.criterion},
          {"graph", report.graph},
          {"p", report.p},
          {"verdict", std::string(to_string(report.verdict))},
          {"violations", violations},
          {"notes", report.notes}};
}

json automorphism_json(const Automorphism& h) {
  return {{"vertex_perm", h.vertex_perm}, {"edge_perm", h.edge_perm}};
}

}  // namespace

std::string to_json(const CriterionReport& report) { return report_json(report).dump(2); }

std::string to_json(const Automorphism& h) { return automorphism_json(h).dump(2); }

std::string to_json(const std::vector<Automorphism>& hs) {
  json list = json::array();
  for (const auto& h : hs) list.push_back(automorphism_json(h));
  return list.dump(2);
}

std::string exclusion_to_json(const std::string& graph, const std::vector<ExclusionEntry>& entries) {
  json list = json::array();
  for (const auto& e : entries) {
    json reports = json::array();
    for (const auto& r : e.reports) reports.push_back(report_json(r));
    list.push_back({{"p", e.p},
                    {"excluded", e.excluded},
                    {"oracle", std::string(to_string(e.oracle))},
                    {"reports", reports}});
  }
  return json{{"graph", graph}, {"entries", list}}.dump(2);
}

std::string to_json(const QuotientMap& map) {
  json edges = json::array();
  for (const auto& e : map.quotient.edges()) edges.push_back({e.a, e.b});
  return json{{"period", map.period},
              {"vertex_orbits", map.orbits.vertices},
              {"edge_orbits", map.orbits.edges},
              {"vertex_projection", map.vertex_projection},
              {"edge_projection", map.edge_projection},
              {"quotient", {{"n", map.quotient.vertex_count()}, {"edges", edges}}}}
      .dump(2);
}

std::string polynomial_to_json(const std::string& kind, const std::string& graph, const Polynomial& poly,
                               std::uint32_t modulus, bool folded) {
  return json{{"kind", kind},
              {"graph", graph},
              {"variables", poly.vars().names()},
              {"modulus", modulus == 0 ? json(nullptr) : json(modulus)},
              {"folded", folded},
              {"polynomial", poly.to_string()}}
      .dump(2);
}

CriterionReport criterion_report_from_json(const std::string& text) {
  const auto j = json::parse(text);
  CriterionReport report;
  report.criterion = j.at("criterion").get<std::string>();
  report.graph = j.at("graph").get<std::string>();
  report.p = j.at("p").get<std::uint32_t>();
  const auto verdict = j.at("verdict").get<std::string>();
  if (verdict != "pass" && verdict != "fail") throw std::invalid_argument("bad verdict '" + verdict + "'");
  report.verdict = verdict == "pass" ? Verdict::Pass : Verdict::Fail;
  for (const auto& v : j.at("violations")) {
    const auto& c = v.at("coefficient");
    report.violations.push_back(
        {v.at("monomial").get<std::string>(), c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<std::int64_t>())});
  }
  report.notes = j.at("notes").get<std::vector<std::string>>();
  return report;
}

}  // namespace graphperiod
