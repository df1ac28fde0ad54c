#include <json.hpp>

#include "zzl/diagram.hpp"
#include "zzl/error.hpp"

namespace zzl::diagram {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& message) {
  throw ParseError(where.empty() ? "/" : where, message);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing key '") + key + "'");
  return *it;
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

std::size_t natural_at(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    bad(where, "expected a natural number");
  }
  return j.get<std::size_t>();
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

void only_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) bad(where, "unexpected key '" + it.key() + "'");
  }
}

[[noreturn]] void shape(const std::string& where, const PointPath& path, const std::string& message) {
  throw ShapeError(where, Issue{path, message});
}

DiagramMap parse_map(const Json& j, const std::string& where, const Diagram* target,
                     const PointPath& path);

Diagram parse_diagram(const Json& j, const std::string& where, const PointPath& path) {
  if (!j.is_object()) bad(where, "expected a diagram object");
  if (j.contains("generator")) {
    only_keys(j, {"generator"}, where);
    return Diagram::point(string_at(j["generator"], where + "/generator"));
  }
  only_keys(j, {"regular", "singular", "forward", "backward"}, where);
  auto levels = [&](const char* key, bool regular) {
    const std::string at = where + "/" + key;
    const Json& arr = array_at(field(j, key, where), at);
    std::vector<Diagram> out;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      PointPath sub = path;
      sub.push_back(regular ? PointIndex::reg(k) : PointIndex::sing(k));
      out.push_back(parse_diagram(arr[k], at + "/" + std::to_string(k), sub));
    }
    return out;
  };
  auto regular = levels("regular", true);
  auto singular = levels("singular", false);
  auto legs = [&](const char* key) {
    const std::string at = where + "/" + key;
    const Json& arr = array_at(field(j, key, where), at);
    std::vector<DiagramMap> out;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const Diagram* target = k < singular.size() ? &singular[k] : nullptr;
      out.push_back(parse_map(arr[k], at + "/" + std::to_string(k), target, path));
    }
    return out;
  };
  auto forward = legs("forward");
  auto backward = legs("backward");
  if (regular.empty()) shape(where + "/regular", path, "a zigzag has at least one regular level");
  try {
    return Diagram::zigzag(std::move(regular), std::move(singular), std::move(forward),
                           std::move(backward));
  } catch (const Error& e) {
    shape(where, path, e.what());
  }
}

// `target`, when known, fixes the target length; otherwise it is implied by
// the regular slice count.
DiagramMap parse_map(const Json& j, const std::string& where, const Diagram* target,
                     const PointPath& path) {
  if (!j.is_object()) bad(where, "expected a map object");
  if (j.contains("source")) {
    only_keys(j, {"source", "target"}, where);
    return DiagramMap::point(string_at(j["source"], where + "/source"),
                             string_at(field(j, "target", where), where + "/target"));
  }
  only_keys(j, {"singular_map", "singular_slices", "regular_slices"}, where);
  if (target != nullptr && target->is_point()) {
    shape(where, path, "zigzag map into a 0-diagram");
  }
  const Json& values = array_at(field(j, "singular_map", where), where + "/singular_map");
  std::vector<std::size_t> vs;
  for (std::size_t k = 0; k < values.size(); ++k) {
    vs.push_back(natural_at(values[k], where + "/singular_map/" + std::to_string(k)));
  }
  auto slices = [&](const char* key, bool regular) {
    const std::string at = where + "/" + key;
    const Json& arr = array_at(field(j, key, where), at);
    std::vector<DiagramMap> out;
    for (std::size_t k = 0; k < arr.size(); ++k) {
      const Diagram* sub = nullptr;
      if (target != nullptr) {
        if (regular && k <= target->length()) sub = &target->regular(k);
        if (!regular && k < vs.size() && vs[k] < target->length()) sub = &target->singular(vs[k]);
      }
      out.push_back(parse_map(arr[k], at + "/" + std::to_string(k), sub, path));
    }
    return out;
  };
  auto sing = slices("singular_slices", false);
  auto reg = slices("regular_slices", true);
  if (reg.empty()) {
    shape(where + "/regular_slices", path, "a zigzag map has at least one regular slice");
  }
  const std::size_t length = target != nullptr ? target->length() : reg.size() - 1;
  try {
    const std::size_t n = vs.size();
    simplicial::MonotoneMap fs(n, length, std::move(vs));
    return DiagramMap::zigzag(std::move(fs), std::move(sing), std::move(reg));
  } catch (const Error& e) {
    shape(where, path, e.what());
  }
}

Json write_map(const DiagramMap& f) {
  Json j = Json::object();
  if (f.is_point()) {
    j["source"] = f.source();
    j["target"] = f.target();
    return j;
  }
  Json values = Json::array();
  for (std::size_t v : f.singular_map().values()) values.push_back(v);
  j["singular_map"] = std::move(values);
  Json sing = Json::array(), reg = Json::array();
  for (const auto& s : f.singular_slices()) sing.push_back(write_map(s));
  for (const auto& r : f.regular_slices()) reg.push_back(write_map(r));
  j["singular_slices"] = std::move(sing);
  j["regular_slices"] = std::move(reg);
  return j;
}

Json write_diagram(const Diagram& d) {
  Json j = Json::object();
  if (d.is_point()) {
    j["generator"] = d.generator();
    return j;
  }
  Json reg = Json::array(), sing = Json::array(), fw = Json::array(), bw = Json::array();
  for (const auto& r : d.regulars()) reg.push_back(write_diagram(r));
  for (const auto& s : d.singulars()) sing.push_back(write_diagram(s));
  for (const auto& f : d.forwards()) fw.push_back(write_map(f));
  for (const auto& b : d.backwards()) bw.push_back(write_map(b));
  j["regular"] = std::move(reg);
  j["singular"] = std::move(sing);
  j["forward"] = std::move(fw);
  j["backward"] = std::move(bw);
  return j;
}

}  // namespace

Document parse(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  if (!root.is_object()) bad("", "expected a document object");
  only_keys(root, {"signature", "diagram"}, "");
  const Json& sig = field(root, "signature", "");
  only_keys(sig, {"generators", "arrows"}, "/signature");
  std::vector<Generator> gens;
  const Json& gj = array_at(field(sig, "generators", "/signature"), "/signature/generators");
  for (std::size_t k = 0; k < gj.size(); ++k) {
    const std::string at = "/signature/generators/" + std::to_string(k);
    if (!gj[k].is_object()) bad(at, "expected a generator object");
    only_keys(gj[k], {"id", "dimension", "color"}, at);
    Generator g;
    g.id = string_at(field(gj[k], "id", at), at + "/id");
    g.dimension = natural_at(field(gj[k], "dimension", at), at + "/dimension");
    if (gj[k].contains("color")) g.color = string_at(gj[k]["color"], at + "/color");
    gens.push_back(std::move(g));
  }
  std::vector<std::pair<std::string, std::string>> arrows;
  if (sig.contains("arrows")) {
    const Json& aj = array_at(sig["arrows"], "/signature/arrows");
    for (std::size_t k = 0; k < aj.size(); ++k) {
      const std::string at = "/signature/arrows/" + std::to_string(k);
      if (!aj[k].is_array() || aj[k].size() != 2) bad(at, "expected a [source, target] pair");
      arrows.emplace_back(string_at(aj[k][0], at + "/0"), string_at(aj[k][1], at + "/1"));
    }
  }
  Document doc{Signature(std::move(gens), std::move(arrows)),
               parse_diagram(field(root, "diagram", ""), "/diagram", {})};
  return doc;
}

std::string serialize(const Document& doc, bool canonical) {
  Json root = Json::object();
  Json sig = Json::object();
  Json gens = Json::array();
  for (const auto& g : doc.signature.generators()) {
    Json gj = Json::object();
    gj["id"] = g.id;
    gj["dimension"] = g.dimension;
    if (g.color) gj["color"] = *g.color;
    gens.push_back(std::move(gj));
  }
  Json arrows = Json::array();
  for (const auto& [s, t] : doc.signature.arrows()) arrows.push_back(Json::array({s, t}));
  sig["generators"] = std::move(gens);
  sig["arrows"] = std::move(arrows);
  root["signature"] = std::move(sig);
  root["diagram"] = write_diagram(doc.diagram);
  return canonical ? root.dump() : root.dump(2) + "\n";
}

}  // namespace zzl::diagram
