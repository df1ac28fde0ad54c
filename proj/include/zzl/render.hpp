#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zzl/diagram.hpp"
#include "zzl/layout.hpp"

namespace zzl::render {

using diagram::PointPath;

struct Style {
  std::string generator;
  std::size_t dimension;
  std::string color;
};

struct ScenePoint {
  PointPath path;
  std::vector<double> coords;
};

struct Vertex {
  std::string generator;
  ScenePoint point;
};

/// A connected set of equally labelled points, joined along covering pairs
/// of the point poset. Wires carry codimension-1 labels, surfaces
/// codimension-2 labels.
struct Component {
  std::string generator;
  std::vector<ScenePoint> points;  // lexicographic fence order
  std::vector<std::pair<std::size_t, std::size_t>> segments;
  /// The points form a single path in this order.
  bool chain = false;
};

/// Joins the end of a wire to a vertex.
struct Leg {
  std::string generator;
  ScenePoint from;  // wire end
  ScenePoint to;    // vertex
};

/// Axis-aligned box of a codimension-2 point, traced from its fence neighbours.
struct Cell {
  std::string generator;
  PointPath path;
  std::vector<double> lo, hi;
};

struct Frame;

struct Scene {
  std::size_t dimension = 0;
  /// Length of the outermost zigzag.
  std::size_t length = 0;
  /// Size of the canvas per coordinate (each axis spans [0, width + 2]).
  std::vector<double> extent;
  std::vector<Style> styles;
  std::vector<Vertex> vertices;
  std::vector<Component> wires;
  std::vector<Leg> legs;
  std::vector<Cell> regions;
  std::vector<Component> surfaces;
  /// Dimension 4 only: one 3-dimensional scene per outermost point.
  std::vector<Frame> frames;
};

struct Frame {
  zigzag::PointIndex outer;
  double height = 0.0;
  Scene scene;
};

/// Throws ArgumentError for dimension > 4.
Scene extract_scene(const diagram::Diagram& d, const layout::DiagramLayout& layout,
                    const diagram::Signature& sig);

/// Dimensions 0 to 2 (lower dimensions are drawn on a vertical line).
std::string to_svg(const Scene& scene, double scale = 40.0);
/// Dimensions 3 and 4.
std::string to_scene_json(const Scene& scene, double scale = 1.0);

struct RenderOptions {
  layout::LayoutOptions layout;
  /// Units per layout coordinate; 0 picks 40 for SVG and 1 for scene JSON.
  double scale = 0.0;
};

/// Lays out and renders: SVG for dimension <= 2, scene JSON for 3 and 4.
std::string render(const diagram::Document& doc, const RenderOptions& options = {});

/// Fixed 6-decimal notation without negative zero.
std::string format_number(double x);

}  // namespace zzl::render
