#include <cmath>
#include <json.hpp>

#include "zzl/layout.hpp"

namespace zzl::layout {

namespace {

using Json = nlohmann::ordered_json;

/// Removes solver noise below the 1e-9 tolerance so that, e.g., 2.9999999999999996
/// is written as 3.
double tidy(double x) {
  const double r = std::round(x * 1e9) / 1e9;
  const double out = std::abs(r - x) <= 1e-9 ? r : x;
  return out == 0.0 ? 0.0 : out;
}

}  // namespace

std::string to_json(const DiagramLayout& layout, bool canonical) {
  Json j = Json::object();
  j["dimension"] = layout.dimension;
  Json widths = Json::array(), per_axis = Json::array();
  for (const AxisReport& a : layout.axes) {
    widths.push_back(tidy(a.width));
    per_axis.push_back(tidy(a.fairness.total));
  }
  j["width_per_axis"] = std::move(widths);
  Json points = Json::array();
  for (std::size_t k = 0; k < layout.paths.size(); ++k) {
    Json path = Json::array(), coords = Json::array();
    for (const auto& p : layout.paths[k]) path.push_back(p.to_string());
    for (double c : layout.coords[k]) coords.push_back(tidy(c));
    Json pt = Json::object();
    pt["path"] = std::move(path);
    pt["coords"] = std::move(coords);
    points.push_back(std::move(pt));
  }
  j["points"] = std::move(points);
  Json fairness = Json::object();
  fairness["per_axis"] = std::move(per_axis);
  fairness["total"] = tidy(layout.total_defect());
  j["fairness"] = std::move(fairness);
  return canonical ? j.dump() : j.dump(2) + "\n";
}

}  // namespace zzl::layout
