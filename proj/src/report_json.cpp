#include "toromaps/report_json.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace toromaps {

namespace {

Json words_json(std::span<const Word> words) {
  Json out = Json::array();
  for (const Word& w : words) out.push_back(w.to_string());
  return out;
}

Json spec_json(const ToroidalSpec& spec) {
  return Json{{"family", std::string(family_name(spec.family))},
              {"s1", spec.s1},
              {"s2", spec.s2}};
}

}  // namespace

std::string format_degree_set(const std::set<std::size_t>& degrees) {
  std::string out = "{";
  for (auto it = degrees.begin(); it != degrees.end(); ++it) {
    if (it != degrees.begin()) out += ", ";
    out += std::to_string(*it);
  }
  return out + "}";
}

Json to_json(const SubgroupClass& cls) {
  return Json{{"order", cls.order},
              {"index", cls.index},
              {"corefree", cls.corefree},
              {"class_size", cls.class_size},
              {"generators", words_json(cls.witness_words)}};
}

Json subgroup_report_json(std::span<const SubgroupClass> classes) {
  Json list = Json::array();
  for (const auto& c : classes) list.push_back(to_json(c));
  return Json{{"schema", kJsonSchemaVersion}, {"classes", std::move(list)}};
}

Json to_json(const DegreeReport& r, bool include_classes) {
  Json witnesses = Json::object();
  for (const auto& [degree, w] : r.witnesses) {
    witnesses[std::to_string(degree)] = Json{{"subgroup", w.label},
                                             {"order", w.subgroup_order},
                                             {"generators", words_json(w.generators)}};
  }
  Json out{{"schema", kJsonSchemaVersion}};
  out.update(spec_json(r.spec));
  out["group_order"] = r.group_order;
  out["translation_order"] = r.translation_order;
  out["computed_degrees"] = r.computed_degrees;
  out["predicted_degrees"] = r.predicted_degrees;
  out["match"] = r.match;
  out["formula_asserted"] = r.formula_asserted;
  out["witnesses"] = std::move(witnesses);
  if (include_classes) {
    Json list = Json::array();
    for (const auto& c : r.classes) list.push_back(to_json(c));
    out["subgroup_classes"] = std::move(list);
  }
  return out;
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  Json out{{"schema", kJsonSchemaVersion}};
  out.update(spec_json(r.spec));
  out["passed"] = r.passed();
  out["checks"] = std::move(checks);
  if (!r.error.empty()) out["error"] = r.error;
  return out;
}

std::string degree_table(std::span<const DegreeReport> reports) {
  struct Row {
    std::string cells[8];
  };
  std::vector<Row> rows;
  rows.push_back({{"family", "s1", "s2", "|T|", "|G|", "degrees", "predicted", "match"}});
  for (const auto& r : reports) {
    std::string verdict = r.match ? "yes" : "NO";
    if (!r.formula_asserted) verdict += " (unclaimed)";
    rows.push_back({{std::string(family_symbol(r.spec.family)), std::to_string(r.spec.s1),
                     std::to_string(r.spec.s2), std::to_string(r.translation_order),
                     std::to_string(r.group_order), format_degree_set(r.computed_degrees),
                     format_degree_set(r.predicted_degrees), verdict}});
  }
  std::size_t width[8] = {};
  for (const auto& row : rows) {
    for (int i = 0; i < 8; ++i) width[i] = std::max(width[i], row.cells[i].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (int i = 0; i < 8; ++i) {
      os << std::left << std::setw(static_cast<int>(width[i])) << row.cells[i];
      os << (i == 7 ? "\n" : "  ");
    }
  }
  std::string out = os.str();
  std::string cleaned;
  std::istringstream is(out);
  for (std::string line; std::getline(is, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    cleaned += line + "\n";
  }
  return cleaned;
}

}  // namespace toromaps
