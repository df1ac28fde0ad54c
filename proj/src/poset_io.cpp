#include <json.hpp>

#include "zzl/poset.hpp"

namespace zzl::poset {

namespace {

using Json = nlohmann::ordered_json;

Json pairs(const Relation& r) {
  Json a = Json::array();
  for (auto [x, y] : r) a.push_back(Json::array({x, y}));
  return a;
}

}  // namespace

std::string to_debug_json(const PosetFunctor& p, const Injectification& inj) {
  const Poset& J = p.index();
  Json j = Json::object();
  j["index"] = Json{{"size", J.size()}, {"order", pairs(J.strict_pairs())}};
  j["linear_extension"] = inj.order;
  Json objects = Json::array();
  for (std::size_t i = 0; i < J.size(); ++i) {
    Json elements = Json::array();
    for (std::size_t e = 0; e < inj.origin[i].size(); ++e) {
      const Element& l = inj.origin[i][e];
      elements.push_back(Json{{"origin", Json::array({l.index, l.element})},
                              {"epsilon", inj.epsilon[i](e)}});
    }
    objects.push_back(Json{{"index", i},
                           {"fiber", p.object(i).size()},
                           {"elements", std::move(elements)},
                           {"order", pairs(inj.hat.object(i).strict_pairs())}});
  }
  j["hat"] = std::move(objects);
  Json arrows = Json::array();
  for (const auto& [pair, f] : inj.hat.arrows()) {
    Json m = Json::array();
    for (std::size_t x : f.mapping()) m.push_back(x);
    arrows.push_back(Json{{"source", pair.first}, {"target", pair.second}, {"map", std::move(m)}});
  }
  j["arrows"] = std::move(arrows);
  const std::string check = check_injectification(p, inj);
  j["check"] = check.empty() ? Json("ok") : Json(check);
  return j.dump(2) + "\n";
}

}  // namespace zzl::poset
