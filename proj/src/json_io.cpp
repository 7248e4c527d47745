#include "dhermite/json_io.hpp"

#include <fstream>

namespace dhermite {

nlohmann::ordered_json poly_to_json(const ExactPoly& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json rec;
    rec["ex"] = m.x;
    rec["ey"] = m.y;
    rec["eL"] = m.l;
    rec["num"] = c.get_num().get_str();
    rec["den"] = c.get_den().get_str();
    arr.push_back(std::move(rec));
  }
  return arr;
}

ExactPoly poly_from_json(const nlohmann::json& j) {
  ExactPoly p;
  for (const auto& rec : j) {
    BigInt num(rec.at("num").get<std::string>());
    BigInt den(rec.at("den").get<std::string>());
    p += ExactPoly::term(make_rational(num, den), rec.at("ex").get<int>(),
                         rec.at("ey").get<int>(), rec.at("eL").get<int>());
  }
  return p;
}

nlohmann::ordered_json reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::ordered_json root;
  root["v"] = 1;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json rec;
    rec["check_name"] = r.check_name;
    rec["variant"] = r.variant;
    rec["params"] = r.params;  // std::map keeps key order stable
    rec["residual"] = r.residual;
    rec["tolerance"] = r.tolerance;
    rec["status"] = to_string(r.status);
    arr.push_back(std::move(rec));
  }
  root["checks"] = std::move(arr);
  return root;
}

void write_reports_file(const std::string& path, const std::vector<CheckReport>& reports) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open report file: " + path);
  out << reports_to_json(reports).dump(2) << "\n";
}

}  // namespace dhermite
