#include "burnside/report.hpp"

#include "burnside/errors.hpp"
#include "burnside/parse.hpp"

namespace burnside {

nlohmann::json element_to_json(const BurnsideElement& x) {
  const SubgroupClassTable& t = subgroup_classes(x.group());
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [cls, v] : x.coeffs())
    terms.push_back({{"class", t.class_label(cls)}, {"coef", v.to_string()}});
  std::string gname = x.group()->label().empty() ? x.group()->fingerprint() : x.group()->label();
  return {{"group", gname}, {"coeff", x.ring().to_string()}, {"terms", terms}};
}

BurnsideElement element_from_json(const nlohmann::json& j) {
  GroupPtr g = parse_group(j.at("group").get<std::string>());
  CoeffRing ring = CoeffRing::parse(j.at("coeff").get<std::string>());
  const SubgroupClassTable& t = subgroup_classes(g);
  BurnsideElement out(g, ring);
  for (const auto& term : j.at("terms")) {
    int idx = t.class_by_label(term.at("class").get<std::string>());
    if (idx < 0) throw ParseError("unknown class label " + term.at("class").get<std::string>());
    out.set_coeff(idx, out.coeff(idx) + Scalar::parse(ring, term.at("coef").get<std::string>()));
  }
  return out;
}

nlohmann::json report_to_json(const Report& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"axiom", e.check},
                       {"instance", e.instance},
                       {"status", e.pass ? "pass" : "fail"},
                       {"lhs", e.lhs},
                       {"rhs", e.rhs}});
  return {{"title", r.title},
          {"notes", r.notes},
          {"entries", entries},
          {"failures", r.failures()}};
}

std::string render_report_text(const Report& r, bool show_passes) {
  std::string out = r.title + "\n";
  for (const auto& n : r.notes) out += "note: " + n + "\n";
  for (const auto& e : r.entries) {
    if (e.pass && !show_passes) continue;
    out += std::string(e.pass ? "pass" : "FAIL") + " " + e.check + " " + e.instance;
    if (!e.pass) out += "\n  lhs = " + e.lhs + "\n  rhs = " + e.rhs;
    out += "\n";
  }
  out += std::to_string(r.entries.size()) + " checks, " + std::to_string(r.failures()) +
         " failures\n";
  return out;
}

nlohmann::json marks_to_json(const GroupPtr& g) {
  const SubgroupClassTable& t = subgroup_classes(g);
  nlohmann::json legend = nlohmann::json::array();
  for (int i = 0; i < t.num_classes(); ++i) {
    const Subgroup& rep = t.class_reps()[i];
    nlohmann::json gens = nlohmann::json::array();
    for (int e : subgroup_generators(rep)) gens.push_back(perm_to_cycles(g->element(e)));
    legend.push_back(
        {{"label", t.class_label(i)}, {"order", rep.order()}, {"generators", gens}});
  }
  // classical orientation: row j = coset space G/H_j, column i = fixing class
  nlohmann::json rows = nlohmann::json::array();
  for (int j = 0; j < t.num_classes(); ++j) {
    nlohmann::json row = nlohmann::json::array();
    for (int i = 0; i < t.num_classes(); ++i) row.push_back(t.marks()[i][j]);
    rows.push_back(row);
  }
  std::string gname = g->label().empty() ? g->fingerprint() : g->label();
  return {{"group", gname}, {"classes", legend}, {"marks", rows}};
}

}  // namespace burnside
