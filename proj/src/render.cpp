#include "zzl/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <map>
#include <numeric>

#include "zzl/error.hpp"

namespace zzl::render {

using diagram::Diagram;
using diagram::ExplodedDiagram;
using layout::DiagramLayout;
using zigzag::PointIndex;

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos) return "0.000000";
  return s;
}

namespace {

std::string default_color(std::size_t dimension) {
  switch (dimension) {
    case 0: return "#f2f2f2";
    case 1: return "#333333";
    case 2: return "#1f77b4";
    default: return "#d62728";
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

/// Components of the points selected by `member`, joined along covers whose
/// endpoints carry the same generator.
std::vector<Component> components(const ExplodedDiagram& e, const DiagramLayout& layout,
                                  const std::vector<char>& member) {
  const std::size_t n = e.size();
  DisjointSets sets(n);
  const auto covers = e.base.covers();
  auto joined = [&](std::size_t a, std::size_t b) {
    return member[a] && member[b] &&
           e.assignment[a].generator() == e.assignment[b].generator();
  };
  for (auto [a, b] : covers) {
    if (joined(a, b)) sets.unite(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;  // keyed by smallest member
  for (std::size_t k = 0; k < n; ++k) {
    if (member[k]) groups[sets.find(k)].push_back(k);
  }
  std::vector<Component> out;
  for (const auto& [root, pts] : groups) {
    Component c;
    c.generator = e.assignment[root].generator();
    std::map<std::size_t, std::size_t> local;
    for (std::size_t k : pts) {
      local[k] = c.points.size();
      c.points.push_back({e.paths[k], layout.coords[k]});
    }
    for (auto [a, b] : covers) {
      if (joined(a, b) && sets.find(a) == root) c.segments.push_back({local[a], local[b]});
    }
    std::sort(c.segments.begin(), c.segments.end());
    bool chain = c.segments.size() + 1 == c.points.size();
    for (std::size_t t = 0; chain && t + 1 < c.points.size(); ++t) {
      chain = std::find(c.segments.begin(), c.segments.end(), std::make_pair(t, t + 1)) !=
              c.segments.end();
    }
    c.chain = chain;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Style> styles_of(const diagram::Signature& sig) {
  std::vector<Style> out;
  for (const auto& g : sig.generators()) {
    out.push_back({g.id, g.dimension, g.color.value_or(default_color(g.dimension))});
  }
  return out;
}

Scene extract_frames(const Diagram& d, const DiagramLayout& layout, const diagram::Signature& sig) {
  Scene scene;
  scene.dimension = 4;
  scene.length = d.length();
  scene.styles = styles_of(sig);
  for (const auto& a : layout.axes) scene.extent.push_back(a.width + 2.0);
  for (std::size_t f = 0; f < 2 * d.length() + 1; ++f) {
    const PointIndex outer = PointIndex::from_fence_position(f);
    DiagramLayout slice;
    slice.dimension = 3;
    slice.axes.assign(layout.axes.begin(), layout.axes.begin() + 3);
    double height = 0.0;
    for (std::size_t k = 0; k < layout.paths.size(); ++k) {
      if (layout.paths[k].front() != outer) continue;
      slice.paths.emplace_back(layout.paths[k].begin() + 1, layout.paths[k].end());
      slice.coords.emplace_back(layout.coords[k].begin(), layout.coords[k].begin() + 3);
      height = layout.coords[k][3];
    }
    Frame frame{outer, height, extract_scene(d.at(outer), slice, sig)};
    scene.frames.push_back(std::move(frame));
  }
  return scene;
}

}  // namespace

Scene extract_scene(const Diagram& d, const DiagramLayout& layout, const diagram::Signature& sig) {
  const std::size_t n = d.dimension();
  if (n > 4) throw ArgumentError("render: dimension " + std::to_string(n) + " is not supported");
  if (layout.dimension != n) throw ArgumentError("render: layout has the wrong dimension");
  if (n == 4) return extract_frames(d, layout, sig);

  const ExplodedDiagram e = n == 0 ? diagram::explode_base(d) : diagram::explode(d, n);
  if (e.paths != layout.paths) throw ArgumentError("render: layout does not match the diagram");
  std::vector<std::size_t> dims(e.size());
  std::size_t top = 0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    const diagram::Generator* g = sig.find(e.assignment[k].generator());
    if (g == nullptr) {
      throw ValidationError("render: unknown generator '" + e.assignment[k].generator() + "'");
    }
    dims[k] = g->dimension;
    top = std::max(top, dims[k]);
  }

  Scene scene;
  scene.dimension = n;
  scene.length = d.length();
  scene.styles = styles_of(sig);
  for (const auto& a : layout.axes) scene.extent.push_back(a.width + 2.0);

  std::vector<char> vertex(e.size(), 0);
  for (std::size_t k = 0; k < e.size(); ++k) {
    const bool all_singular =
        std::all_of(e.paths[k].begin(), e.paths[k].end(), [](PointIndex p) { return p.singular(); });
    if (all_singular && dims[k] == top) {
      vertex[k] = 1;
      scene.vertices.push_back({e.assignment[k].generator(), {e.paths[k], layout.coords[k]}});
    }
  }
  if (n >= 1) {
    std::vector<char> wire(e.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) wire[k] = dims[k] + 1 == n;
    scene.wires = components(e, layout, wire);
    for (auto [a, b] : e.base.covers()) {
      std::size_t from = a, to = b;
      if (!wire[from] || !vertex[to]) std::swap(from, to);
      if (!wire[from] || !vertex[to] || vertex[from]) continue;
      scene.legs.push_back({e.assignment[from].generator(),
                            {e.paths[from], layout.coords[from]},
                            {e.paths[to], layout.coords[to]}});
    }
  }
  if (n == 2) {
    auto coord = [&](const diagram::PointPath& p, std::size_t axis) -> std::optional<double> {
      const auto* c = layout.find(p);
      if (c == nullptr) return std::nullopt;
      return (*c)[axis];
    };
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (dims[k] != 0) continue;
      const PointIndex o = e.paths[k][0], i = e.paths[k][1];
      const std::size_t fo = o.fence_position(), fi = i.fence_position();
      Cell cell{e.assignment[k].generator(), e.paths[k], {0.0, 0.0}, scene.extent};
      if (fi > 0) {
        if (auto x = coord({o, PointIndex::from_fence_position(fi - 1)}, 0)) cell.lo[0] = *x;
      }
      if (auto x = coord({o, PointIndex::from_fence_position(fi + 1)}, 0)) cell.hi[0] = *x;
      const double y = layout.coords[k][1];
      if (fo > 0) {
        if (auto y0 = coord({PointIndex::from_fence_position(fo - 1), PointIndex::reg(0)}, 1)) {
          cell.lo[1] = 0.5 * (*y0 + y);
        }
      }
      if (auto y1 = coord({PointIndex::from_fence_position(fo + 1), PointIndex::reg(0)}, 1)) {
        cell.hi[1] = 0.5 * (*y1 + y);
      }
      scene.regions.push_back(std::move(cell));
    }
  }
  if (n == 3) {
    std::vector<char> sheet(e.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) sheet[k] = dims[k] + 2 == n;
    scene.surfaces = components(e, layout, sheet);
  }
  return scene;
}

// ---------------------------------------------------------------------------

namespace {

struct Canvas {
  double width, height, scale;
  std::size_t dimension;
  std::size_t outer_length;

  std::pair<double, double> planar(const std::vector<double>& c) const {
    switch (dimension) {
      case 0: return {1.0, 1.0};
      case 1: return {1.0, c[0]};
      default: return {c[0], c[1]};
    }
  }
  std::string x(double v) const { return format_number(v * scale); }
  std::string y(double v) const { return format_number((height - v) * scale); }
};

std::string color_of(const Scene& s, const std::string& generator) {
  for (const Style& st : s.styles) {
    if (st.generator == generator) return st.color;
  }
  return default_color(0);
}

std::string curve(const Canvas& cv, std::pair<double, double> a, std::pair<double, double> b) {
  // vertical tangents at both ends
  const double ym = 0.5 * (a.second + b.second);
  return " C " + cv.x(a.first) + " " + cv.y(ym) + " " + cv.x(b.first) + " " + cv.y(ym) + " " +
         cv.x(b.first) + " " + cv.y(b.second);
}

std::string move_to(const Canvas& cv, std::pair<double, double> a) {
  return "M " + cv.x(a.first) + " " + cv.y(a.second);
}

std::string wire_path(const Canvas& cv, const Component& w) {
  std::string d;
  if (w.chain) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : w.points) pts.push_back(cv.planar(p.coords));
    // Ends on the outermost boundary levels run to the edge of the canvas.
    const PointIndex first = w.points.front().path.empty() ? PointIndex::reg(0)
                                                           : w.points.front().path.front();
    const PointIndex last = w.points.back().path.empty() ? PointIndex::reg(0)
                                                         : w.points.back().path.front();
    if (first == PointIndex::reg(0)) pts.insert(pts.begin(), {pts.front().first, 0.0});
    if (last == PointIndex::reg(cv.outer_length)) pts.push_back({pts.back().first, cv.height});
    d = move_to(cv, pts[0]);
    for (std::size_t k = 1; k < pts.size(); ++k) d += curve(cv, pts[k - 1], pts[k]);
    return d;
  }
  for (auto [a, b] : w.segments) {
    if (!d.empty()) d += ' ';
    const auto pa = cv.planar(w.points[a].coords), pb = cv.planar(w.points[b].coords);
    d += move_to(cv, pa) + curve(cv, pa, pb);
  }
  return d;
}

}  // namespace

std::string to_svg(const Scene& scene, double scale) {
  if (scene.dimension > 2) {
    throw ArgumentError("to_svg: scene has dimension " + std::to_string(scene.dimension));
  }
  Canvas cv{2.0, 2.0, scale, scene.dimension, scene.length};
  if (scene.dimension == 1) cv.height = scene.extent.at(0);
  if (scene.dimension == 2) {
    cv.width = scene.extent.at(0);
    cv.height = scene.extent.at(1);
  }
  const std::string sw = format_number(0.1 * scale);
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + cv.x(cv.width) +
         "\" height=\"" + format_number(cv.height * scale) + "\" viewBox=\"0 0 " +
         cv.x(cv.width) + " " + format_number(cv.height * scale) + "\">\n";
  if (!scene.regions.empty()) {
    out += "<g id=\"regions\">\n";
    for (std::size_t k = 0; k < scene.regions.size(); ++k) {
      const Cell& c = scene.regions[k];
      out += "<rect id=\"region-" + std::to_string(k) + "\" class=\"region\" data-generator=\"" +
             c.generator + "\" x=\"" + cv.x(c.lo[0]) + "\" y=\"" + cv.y(c.hi[1]) + "\" width=\"" +
             format_number((c.hi[0] - c.lo[0]) * scale) + "\" height=\"" +
             format_number((c.hi[1] - c.lo[1]) * scale) + "\" fill=\"" +
             color_of(scene, c.generator) + "\"/>\n";
    }
    out += "</g>\n";
  }
  if (!scene.wires.empty()) {
    out += "<g id=\"wires\">\n";
    for (std::size_t k = 0; k < scene.wires.size(); ++k) {
      const Component& w = scene.wires[k];
      out += "<path id=\"wire-" + std::to_string(k) + "\" class=\"wire\" data-generator=\"" +
             w.generator + "\" d=\"" + wire_path(cv, w) + "\" fill=\"none\" stroke=\"" +
             color_of(scene, w.generator) + "\" stroke-width=\"" + sw + "\"/>\n";
    }
    out += "</g>\n";
  }
  if (!scene.legs.empty()) {
    out += "<g id=\"legs\">\n";
    for (std::size_t k = 0; k < scene.legs.size(); ++k) {
      const Leg& l = scene.legs[k];
      const auto a = cv.planar(l.from.coords), b = cv.planar(l.to.coords);
      out += "<path id=\"leg-" + std::to_string(k) + "\" class=\"leg\" data-generator=\"" +
             l.generator + "\" d=\"" + move_to(cv, a) + curve(cv, a, b) +
             "\" fill=\"none\" stroke=\"" + color_of(scene, l.generator) + "\" stroke-width=\"" +
             sw + "\"/>\n";
    }
    out += "</g>\n";
  }
  if (!scene.vertices.empty()) {
    out += "<g id=\"vertices\">\n";
    for (std::size_t k = 0; k < scene.vertices.size(); ++k) {
      const Vertex& v = scene.vertices[k];
      const auto p = cv.planar(v.point.coords);
      out += "<circle id=\"vertex-" + std::to_string(k) + "\" class=\"vertex\" data-generator=\"" +
             v.generator + "\" cx=\"" + cv.x(p.first) + "\" cy=\"" + cv.y(p.second) + "\" r=\"" +
             format_number(0.15 * scale) + "\" fill=\"" + color_of(scene, v.generator) + "\"/>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using Json = nlohmann::ordered_json;

/// Serializes with fixed-notation floats; otherwise like dump(2).
void write_json(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::number_float: out += format_number(j.get<double>()); return;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const Json& x : j) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += inner;
        write_json(out, x, indent + 1);
      }
      out += flat ? "]" : "\n" + pad + "]";
      return;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(it.key()).dump() + ": ";
        write_json(out, it.value(), indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    default: out += j.dump(); return;
  }
}

Json path_json(const PointPath& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(x.to_string());
  return a;
}

Json coords_json(const std::vector<double>& c, double scale) {
  Json a = Json::array();
  for (double v : c) a.push_back(v * scale);
  return a;
}

Json point_json(const ScenePoint& p, double scale) {
  Json j = Json::object();
  j["path"] = path_json(p.path);
  j["coords"] = coords_json(p.coords, scale);
  return j;
}

Json component_json(const Component& c, const std::string& id, const char* edges, double scale) {
  Json j = Json::object();
  j["id"] = id;
  j["generator"] = c.generator;
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(point_json(p, scale));
  j["points"] = std::move(pts);
  Json seg = Json::array();
  for (auto [a, b] : c.segments) seg.push_back(Json::array({a, b}));
  j[edges] = std::move(seg);
  return j;
}

Json scene_json(const Scene& s, double scale, bool with_styles) {
  Json j = Json::object();
  j["dimension"] = s.dimension;
  j["extent"] = coords_json(s.extent, scale);
  if (with_styles) {
    Json styles = Json::array();
    for (const Style& st : s.styles) {
      styles.push_back(Json{{"generator", st.generator}, {"dimension", st.dimension}, {"color", st.color}});
    }
    j["styles"] = std::move(styles);
  }
  if (s.dimension == 4) {
    Json frames = Json::array();
    for (const Frame& f : s.frames) {
      Json fj = Json::object();
      fj["index"] = f.outer.to_string();
      fj["height"] = f.height * scale;
      fj["scene"] = scene_json(f.scene, scale, false);
      frames.push_back(std::move(fj));
    }
    j["frames"] = std::move(frames);
    return j;
  }
  Json vertices = Json::array();
  for (std::size_t k = 0; k < s.vertices.size(); ++k) {
    Json v = Json::object();
    v["id"] = "vertex-" + std::to_string(k);
    v["generator"] = s.vertices[k].generator;
    v["path"] = path_json(s.vertices[k].point.path);
    v["coords"] = coords_json(s.vertices[k].point.coords, scale);
    vertices.push_back(std::move(v));
  }
  j["vertices"] = std::move(vertices);
  Json wires = Json::array();
  for (std::size_t k = 0; k < s.wires.size(); ++k) {
    wires.push_back(component_json(s.wires[k], "wire-" + std::to_string(k), "segments", scale));
  }
  j["wires"] = std::move(wires);
  Json legs = Json::array();
  for (std::size_t k = 0; k < s.legs.size(); ++k) {
    Json l = Json::object();
    l["id"] = "leg-" + std::to_string(k);
    l["generator"] = s.legs[k].generator;
    l["from"] = point_json(s.legs[k].from, scale);
    l["to"] = point_json(s.legs[k].to, scale);
    legs.push_back(std::move(l));
  }
  j["legs"] = std::move(legs);
  Json surfaces = Json::array();
  for (std::size_t k = 0; k < s.surfaces.size(); ++k) {
    surfaces.push_back(component_json(s.surfaces[k], "surface-" + std::to_string(k), "edges", scale));
  }
  j["surfaces"] = std::move(surfaces);
  return j;
}

}  // namespace

std::string to_scene_json(const Scene& scene, double scale) {
  if (scene.dimension != 3 && scene.dimension != 4) {
    throw ArgumentError("to_scene_json: scene has dimension " + std::to_string(scene.dimension));
  }
  std::string out;
  write_json(out, scene_json(scene, scale, true), 0);
  out += '\n';
  return out;
}

std::string render(const diagram::Document& doc, const RenderOptions& options) {
  const DiagramLayout layout = layout::diagram_layout(doc.diagram, options.layout);
  const Scene scene = extract_scene(doc.diagram, layout, doc.signature);
  if (scene.dimension <= 2) return to_svg(scene, options.scale > 0 ? options.scale : 40.0);
  return to_scene_json(scene, options.scale > 0 ? options.scale : 1.0);
}

}  // namespace zzl::render
