#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zzl/diagram.hpp"
#include "zzl/lp.hpp"
#include "zzl/poset.hpp"

namespace zzl::layout {

/// Which pairs i < j of the index poset feed the (†) and (‡) constraints.
enum class PairMode { Covers, All };

struct LayoutOptions {
  PairMode pairs = PairMode::Covers;
  /// Keep only the transitive reduction of the unit-gap constraints and bound
  /// by w only the elements with nothing above them. Same feasible set.
  bool reduce = true;
};

struct ZigzagLayout {
  double width = 0.0;
  /// heights[i][p]: position of singular level p of the zigzag at index i.
  std::vector<std::vector<double>> heights;
};

/// heights[i][k] is the position of the k-th point of the fence
/// reg 0 < sing 0 < reg 1 < ... at index i.
struct ExtendedHeights {
  std::vector<std::vector<double>> heights;
};

struct Defect {
  std::size_t source;
  std::size_t target;
  std::size_t position;  // singular level of the target
  double value;
};

struct FairnessReport {
  std::vector<Defect> defects;
  double total = 0.0;
};

/// The zigzags of an exploded diagram as chains, with their singular maps.
/// Throws StructuralError on non-functorial input.
poset::PosetFunctor singular_poset_diagram(const diagram::ExplodedDiagram& e);

struct LayoutProgram {
  lp::LinearProgram program;
  std::size_t width = 0;
  /// v[i][e]: variable of element e of hat(i).
  std::vector<std::vector<std::size_t>> v;
  /// Penalty variables per pair (i, j), indexed by the elements of hat(i).
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>>> m;
};

LayoutProgram build_lp(const poset::PosetFunctor& p, const poset::Injectification& inj,
                       const LayoutOptions& options = {});

FairnessReport fairness_defect(const ZigzagLayout& layout, const poset::PosetFunctor& p,
                               PairMode pairs = PairMode::Covers);

struct ZigzagResult {
  ZigzagLayout layout;
  FairnessReport fairness;
  /// Sum of the penalty variables at the optimum.
  double penalty = 0.0;
  double objective = 0.0;
  std::size_t variables = 0;
  std::size_t constraints = 0;
};

/// Zigzag layout of a functor given as explosion data. Throws InternalError
/// if the program is not solvable.
ZigzagResult zigzag_layout(const diagram::ExplodedDiagram& e, const LayoutOptions& options = {});
ZigzagResult zigzag_layout(const poset::PosetFunctor& p, const LayoutOptions& options = {});

ExtendedHeights extend_heights(const ZigzagLayout& layout, const std::vector<std::size_t>& lengths);

struct AxisReport {
  double width = 0.0;
  FairnessReport fairness;
  double penalty = 0.0;
  std::size_t variables = 0;
  std::size_t constraints = 0;
};

struct DiagramLayout {
  std::size_t dimension = 0;
  /// All points of the diagram at full depth, in lexicographic fence order.
  std::vector<diagram::PointPath> paths;
  /// coords[k] belongs to paths[k]; the innermost axis comes first.
  std::vector<std::vector<double>> coords;
  /// One entry per coordinate, in coordinate order.
  std::vector<AxisReport> axes;

  const std::vector<double>* find(const diagram::PointPath& path) const;
  double total_defect() const;
};

DiagramLayout diagram_layout(const diagram::Diagram& d, const LayoutOptions& options = {});

std::string to_json(const DiagramLayout& layout, bool canonical = false);

}  // namespace zzl::layout
