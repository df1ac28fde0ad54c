#include <doctest.h>

#include <json.hpp>

#include "support.hpp"
#include "zzl/diagram.hpp"
#include "zzl/error.hpp"
#include "zzl/layout.hpp"
#include "zzl/render.hpp"

using namespace zzl;
using namespace zzl::render;

namespace {

const diagram::Document& doc(const std::string& name) {
  const auto* e = diagram::find_example(name);
  REQUIRE(e != nullptr);
  return e->document;
}

Scene scene_of(const std::string& name) {
  const auto& d = doc(name);
  return extract_scene(d.diagram, layout::diagram_layout(d.diagram), d.signature);
}

std::string golden_name(const diagram::Document& d, const std::string& name) {
  return name + (d.diagram.dimension() <= 2 ? ".svg" : ".json");
}

}  // namespace

TEST_SUITE("render") {

TEST_CASE("number formatting") {
  CHECK(format_number(1.5) == "1.500000");
  CHECK(format_number(-0.0) == "0.000000");
  CHECK(format_number(-1e-9) == "0.000000");
  CHECK(format_number(-2.25) == "-2.250000");
  CHECK(format_number(1e7) == "10000000.000000");
}

TEST_CASE("point: one vertex, no wires") {
  const Scene s = scene_of("point");
  CHECK(s.vertices.size() == 1);
  CHECK(s.wires.empty());
  CHECK(s.vertices[0].generator == "x");
}

TEST_CASE("monad scene") {
  const Scene s = scene_of("monad");
  REQUIRE(s.vertices.size() == 1);
  CHECK(s.vertices[0].generator == "m");
  CHECK(s.wires.size() == 3);
  CHECK(s.legs.size() == 3);
  // every wire reaches the bottom or the top boundary
  for (const auto& w : s.wires) {
    CHECK(w.generator == "f");
    bool boundary = false;
    for (const auto& p : w.points) {
      boundary = boundary || p.path.front() == zigzag::PointIndex::reg(0) ||
                 p.path.front() == zigzag::PointIndex::reg(s.length);
    }
    CHECK(boundary);
  }
  CHECK_FALSE(s.regions.empty());
  for (const auto& r : s.regions) CHECK(r.generator == "x");
}

TEST_CASE("identity 2-diagram: wires only, straight") {
  const Scene s = scene_of("identity-2");
  CHECK(s.vertices.empty());
  CHECK(s.wires.size() == 1);
  const std::string svg = to_svg(s);
  for (const auto& xs : test::svg_wire_xs(svg)) {
    REQUIRE_FALSE(xs.empty());
    for (const auto& x : xs) CHECK(x == xs.front());
  }
}

TEST_CASE("straight wires wherever the layout is fair") {
  for (const auto& e : diagram::builtin_examples()) {
    if (e.document.diagram.dimension() > 2) continue;
    const auto l = layout::diagram_layout(e.document.diagram);
    if (l.total_defect() > 1e-9) continue;
    const std::string svg = to_svg(extract_scene(e.document.diagram, l, e.document.signature));
    for (const auto& xs : test::svg_wire_xs(svg)) {
      for (const auto& x : xs) CHECK_MESSAGE(x == xs.front(), e.name);
    }
  }
}

TEST_CASE("coordinates are the layout times the scale") {
  const auto& d = doc("monad");
  const auto l = layout::diagram_layout(d.diagram);
  const Scene s = extract_scene(d.diagram, l, d.signature);
  const std::string svg = to_svg(s, 10.0);
  const auto& v = s.vertices.at(0).point;
  CHECK(v.coords == *l.find(v.path));
  const std::string cx = "cx=\"" + format_number(v.coords[0] * 10.0) + "\"";
  const std::string cy = "cy=\"" + format_number((s.extent[1] - v.coords[1]) * 10.0) + "\"";
  CHECK(svg.find(cx) != std::string::npos);
  CHECK(svg.find(cy) != std::string::npos);

  const auto& a = doc("associator");
  const auto la = layout::diagram_layout(a.diagram);
  const Scene sa = extract_scene(a.diagram, la, a.signature);
  const auto j = nlohmann::json::parse(to_scene_json(sa, 2.0));
  for (const auto& vj : j["vertices"]) {
    diagram::PointPath path;
    for (const auto& t : vj["path"]) path.push_back(zigzag::PointIndex::parse(t.get<std::string>()));
    const auto* c = la.find(path);
    REQUIRE(c != nullptr);
    for (std::size_t k = 0; k < c->size(); ++k) {
      CHECK(vj["coords"][k].get<double>() == doctest::Approx((*c)[k] * 2.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("empty scene") {
  const std::string svg = to_svg(Scene{});
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<g") == std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("associator scene") {
  const Scene s = scene_of("associator");
  REQUIRE(s.vertices.size() == 1);
  CHECK(s.vertices[0].generator == "a");
  CHECK_FALSE(s.surfaces.empty());
  for (const auto& f : s.surfaces) CHECK(f.generator == "f");
  const auto j = nlohmann::json::parse(to_scene_json(s));
  CHECK(j["dimension"] == 3);
  CHECK(j["surfaces"].size() == s.surfaces.size());
}

TEST_CASE("eckmann-hilton wires exchange") {
  const Scene s = scene_of("eckmann-hilton");
  REQUIRE(s.vertices.size() == 2);
  REQUIRE(s.wires.size() == 2);
  // position on the middle axis at the lowest and the highest outer level
  auto ends = [](const Component& w) {
    const ScenePoint* lo = &w.points.front();
    const ScenePoint* hi = &w.points.front();
    for (const auto& p : w.points) {
      if (p.coords[2] < lo->coords[2]) lo = &p;
      if (p.coords[2] > hi->coords[2]) hi = &p;
    }
    return std::pair{lo->coords[1], hi->coords[1]};
  };
  const auto [a0, a1] = ends(s.wires[0]);
  const auto [b0, b1] = ends(s.wires[1]);
  CHECK((a0 < b0) != (a1 < b1));
}

TEST_CASE("4-diagrams give one frame per outer point") {
  const Scene s = scene_of("associator-identity");
  CHECK(s.dimension == 4);
  CHECK(s.frames.size() == 2 * s.length + 1);
  for (const auto& f : s.frames) CHECK(f.scene.dimension == 3);
  const auto j = nlohmann::json::parse(to_scene_json(s));
  CHECK(j["frames"].size() == s.frames.size());
}

TEST_CASE("dimension errors") {
  CHECK_THROWS_AS(to_svg(scene_of("associator")), ArgumentError);
  CHECK_THROWS_AS(to_scene_json(scene_of("monad")), ArgumentError);
  // a 5-diagram: identity on the associator identity
  const auto& base = doc("associator-identity");
  const diagram::Diagram five = diagram::Diagram::zigzag({base.diagram}, {}, {}, {});
  CHECK_THROWS_AS(extract_scene(five, layout::diagram_layout(five), base.signature), ArgumentError);
}

TEST_CASE("output is deterministic and matches the golden files") {
  for (const auto& e : diagram::builtin_examples()) {
    const std::string a = render::render(e.document), b = render::render(e.document);
    CHECK(a == b);
    const auto golden = test::read_text(test::golden_dir() + "/" + golden_name(e.document, e.name));
    REQUIRE_MESSAGE(golden.has_value(), "missing golden for " << e.name);
    CHECK_MESSAGE(a == *golden, e.name);
  }
}

}
