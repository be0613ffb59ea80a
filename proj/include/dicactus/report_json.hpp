#pragma once

#include <string>

#include "dicactus/resistance.hpp"
#include "json.hpp"

namespace dicactus {

/// Report as JSON with a fixed key order:
/// n, kappa, cactus, r_le_d, R, D, violations.
inline nlohmann::ordered_json to_json(const ResistanceReport& report) {
  using nlohmann::ordered_json;
  const std::size_t n = report.graph.order();
  ordered_json r = ordered_json::array();
  ordered_json d = ordered_json::array();
  for (std::size_t i = 0; i < n; ++i) {
    ordered_json r_row = ordered_json::array();
    ordered_json d_row = ordered_json::array();
    for (std::size_t j = 0; j < n; ++j) {
      r_row.push_back(to_string(report.resistance(i, j)));
      d_row.push_back(report.distance(i, j).get_si());
    }
    r.push_back(std::move(r_row));
    d.push_back(std::move(d_row));
  }
  ordered_json violations = ordered_json::array();
  for (const Violation& v : report.violations) {
    ordered_json item;
    item["i"] = v.i;
    item["j"] = v.j;
    item["r"] = to_string(v.r);
    item["d"] = v.d.get_si();
    violations.push_back(std::move(item));
  }
  ordered_json out;
  out["n"] = n;
  out["kappa"] = to_string(report.kappa);
  out["cactus"] = report.is_cactus;
  out["r_le_d"] = report.r_le_d;
  out["R"] = std::move(r);
  out["D"] = std::move(d);
  out["violations"] = std::move(violations);
  return out;
}

}  // namespace dicactus
