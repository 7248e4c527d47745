#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dhermite/poly.hpp"
#include "dhermite/verify.hpp"

namespace dhermite {

// Term list as an array of {"ex","ey","eL","num","den"} records with the
// rational coefficient in reduced decimal strings, sorted lexicographically
// by (ex, ey, eL).
nlohmann::ordered_json poly_to_json(const ExactPoly& p);
ExactPoly poly_from_json(const nlohmann::json& j);

// Report file schema: {"v": 1, "checks": [CheckReport...]}.
nlohmann::ordered_json reports_to_json(const std::vector<CheckReport>& reports);
void write_reports_file(const std::string& path, const std::vector<CheckReport>& reports);

}  // namespace dhermite
