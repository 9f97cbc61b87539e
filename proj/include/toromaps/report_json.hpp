#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "toromaps/subgroups.hpp"
#include "toromaps/toroidal_analysis.hpp"

namespace toromaps {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchemaVersion = 1;

/// {order, index, corefree, class_size, generators}
Json to_json(const SubgroupClass& cls);
/// Subgroup class list wrapped with the schema version.
Json subgroup_report_json(std::span<const SubgroupClass> classes);
/// DegreeReport, optionally with the full subgroup class list.
Json to_json(const DegreeReport& report, bool include_classes = false);
Json to_json(const VerificationReport& report);

/// Plain-text table: family, s1, s2, |T|, |G|, degrees, predicted,
/// match. No trailing spaces.
std::string degree_table(std::span<const DegreeReport> reports);

std::string format_degree_set(const std::set<std::size_t>& degrees);

}  // namespace toromaps
