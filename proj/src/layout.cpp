#include "zzl/layout.hpp"

#include <cmath>
#include <map>
#include <set>

#include "zzl/error.hpp"

namespace zzl::layout {

using diagram::ExplodedDiagram;
using poset::Element;
using poset::Injectification;
using poset::Poset;
using poset::PosetFunctor;

PosetFunctor singular_poset_diagram(const ExplodedDiagram& e) {
  std::vector<Poset> objects;
  objects.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const diagram::Diagram& x = e.assignment[i];
    if (x.is_point()) {
      throw ArgumentError("singular_poset_diagram: value at " + diagram::to_string(e.paths[i]) +
                          " is not a zigzag");
    }
    objects.push_back(Poset::chain(x.length()));
  }
  PosetFunctor::Arrows arrows;
  for (const auto& [pair, f] : e.arrows) {
    const auto values = f.singular_map().values();
    arrows.emplace(pair, poset::MonotoneFn(objects[pair.first], objects[pair.second],
                                           {values.begin(), values.end()}));
  }
  return PosetFunctor(e.base, std::move(objects), std::move(arrows));
}

namespace {

poset::Relation pairs_of(const Poset& j, PairMode mode) {
  return mode == PairMode::Covers ? j.covers() : j.strict_pairs();
}

/// hat(i) -> hat(j) for i <= j.
std::vector<std::size_t> hat_map(const Injectification& inj, std::size_t i, std::size_t j) {
  return inj.hat.composite(i, j);
}

std::string label(const Element& e) {
  return std::to_string(e.index) + "_" + std::to_string(e.element);
}

/// own[i][x]: the element of hat(i) labelled (i, x).
std::vector<std::vector<std::size_t>> own_copies(const PosetFunctor& p, const Injectification& inj) {
  std::vector<std::vector<std::size_t>> own(p.index().size());
  for (std::size_t i = 0; i < own.size(); ++i) {
    own[i].assign(p.object(i).size(), 0);
    for (std::size_t e = 0; e < inj.origin[i].size(); ++e) {
      if (inj.origin[i][e].index == i) own[i][inj.origin[i][e].element] = e;
    }
  }
  return own;
}

}  // namespace

LayoutProgram build_lp(const PosetFunctor& p, const Injectification& inj,
                       const LayoutOptions& options) {
  using lp::Relation;
  const Poset& J = p.index();
  const std::size_t n = J.size();
  LayoutProgram out;
  lp::LinearProgram& prog = out.program;
  out.width = prog.add_variable("w");
  prog.add_objective_term(out.width, 1.0);

  out.v.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const Element& e : inj.origin[i]) {
      out.v[i].push_back(prog.add_variable("v_" + std::to_string(i) + "_" + label(e)));
    }
  }
  const auto pairs = pairs_of(J, options.pairs);
  for (auto [i, j] : pairs) {
    std::vector<std::size_t> vars;
    for (const Element& e : inj.origin[i]) {
      vars.push_back(prog.add_variable("m_" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                                       label(e)));
      prog.add_objective_term(vars.back(), 1.0);
    }
    out.m.push_back({{i, j}, std::move(vars)});
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Poset& h = inj.hat.object(i);
    const poset::MonotoneFn& eps = inj.epsilon[i];
    const std::size_t size = h.size();
    // Unit gaps from (∗) and (◇), deduplicated.
    std::vector<std::uint8_t> gap(size * size, 0);
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = 0; b < size; ++b) {
        if (h.less(a, b) || eps(a) < eps(b)) gap[a * size + b] = 1;
      }
    }
    std::vector<bool> has_above(size, false);
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = 0; b < size; ++b) {
        if (!gap[a * size + b]) continue;
        has_above[a] = true;
        if (options.reduce) {
          // Implied by a path through some c of two unit gaps (the gap
          // relation is transitive).
          bool implied = false;
          for (std::size_t c = 0; c < size && !implied; ++c) {
            implied = gap[a * size + c] && gap[c * size + b];
          }
          if (implied) continue;
        }
        prog.add_constraint({{out.v[i][b], 1.0}, {out.v[i][a], -1.0}}, Relation::GreaterEqual, 1.0);
      }
    }
    // (⋆); the lower bound 0 is the variable bound.
    for (std::size_t a = 0; a < size; ++a) {
      if (options.reduce && has_above[a]) continue;
      prog.add_constraint({{out.v[i][a], 1.0}, {out.width, -1.0}}, Relation::LessEqual, 0.0);
    }
  }

  const auto own = own_copies(p, inj);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    const std::vector<std::size_t> h = hat_map(inj, i, j);
    const std::vector<std::size_t>& m = out.m[k].second;
    for (std::size_t e = 0; e < h.size(); ++e) {
      // (†) |v_i - v_j| <= m
      prog.add_constraint({{out.v[i][e], 1.0}, {out.v[j][h[e]], -1.0}, {m[e], -1.0}},
                          Relation::LessEqual, 0.0);
      prog.add_constraint({{out.v[j][h[e]], 1.0}, {out.v[i][e], -1.0}, {m[e], -1.0}},
                          Relation::LessEqual, 0.0);
    }
    // (‡) |pre| v_{j,q} = sum of v_{j,p} over the preimage
    const auto& f = p.composite(i, j);
    for (std::size_t q = 0; q < p.object(j).size(); ++q) {
      lp::Linear row;
      for (std::size_t x = 0; x < f.size(); ++x) {
        if (f[x] == q) row.push_back({out.v[j][h[own[i][x]]], 1.0});
      }
      if (row.empty()) continue;
      row.push_back({out.v[j][own[j][q]], -static_cast<double>(row.size())});
      prog.add_constraint(std::move(row), Relation::Equal, 0.0);
    }
  }
  return out;
}

FairnessReport fairness_defect(const ZigzagLayout& layout, const PosetFunctor& p, PairMode pairs) {
  FairnessReport out;
  for (auto [i, j] : pairs_of(p.index(), pairs)) {
    const auto& f = p.composite(i, j);
    for (std::size_t q = 0; q < p.object(j).size(); ++q) {
      double sum = 0.0;
      std::size_t count = 0;
      for (std::size_t x = 0; x < f.size(); ++x) {
        if (f[x] == q) {
          sum += layout.heights[i][x];
          ++count;
        }
      }
      if (count == 0) continue;
      const double d = std::abs(layout.heights[j][q] - sum / static_cast<double>(count));
      out.defects.push_back({i, j, q, d});
      out.total += d;
    }
  }
  return out;
}

ZigzagResult zigzag_layout(const PosetFunctor& p, const LayoutOptions& options) {
  const Injectification inj = poset::injectify(p);
  const LayoutProgram program = build_lp(p, inj, options);
  const lp::LpSolution sol = lp::solve(program.program);
  if (sol.status != lp::Status::Optimal) {
    throw InternalError(std::string("zigzag layout: program is ") + lp::to_string(sol.status));
  }
  ZigzagResult out;
  out.layout.width = sol.assignment[program.width];
  const auto own = own_copies(p, inj);
  out.layout.heights.resize(p.index().size());
  for (std::size_t i = 0; i < own.size(); ++i) {
    for (std::size_t x = 0; x < own[i].size(); ++x) {
      out.layout.heights[i].push_back(sol.assignment[program.v[i][own[i][x]]]);
    }
  }
  for (const auto& [pair, vars] : program.m) {
    for (std::size_t v : vars) out.penalty += sol.assignment[v];
  }
  out.objective = sol.objective;
  out.fairness = fairness_defect(out.layout, p, options.pairs);
  out.variables = program.program.variable_count();
  out.constraints = program.program.constraint_count();
  return out;
}

ZigzagResult zigzag_layout(const ExplodedDiagram& e, const LayoutOptions& options) {
  return zigzag_layout(singular_poset_diagram(e), options);
}

ExtendedHeights extend_heights(const ZigzagLayout& layout, const std::vector<std::size_t>& lengths) {
  if (lengths.size() != layout.heights.size()) {
    throw ArgumentError("extend_heights: " + std::to_string(lengths.size()) + " lengths for " +
                        std::to_string(layout.heights.size()) + " indices");
  }
  const double w = layout.width;
  ExtendedHeights out;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const std::size_t n = lengths[i];
    const std::vector<double>& lambda = layout.heights[i];
    if (lambda.size() != n) throw ArgumentError("extend_heights: length mismatch at index " + std::to_string(i));
    std::vector<double> h(2 * n + 1);
    if (n == 0) {
      h[0] = 0.5 * w + 1.0;
    } else {
      h[0] = 0.0;
      for (std::size_t k = 0; k < n; ++k) h[2 * k + 1] = lambda[k] + 1.0;
      for (std::size_t j = 1; j < n; ++j) h[2 * j] = 0.5 * (lambda[j - 1] + lambda[j]) + 1.0;
      h[2 * n] = w + 2.0;
    }
    out.heights.push_back(std::move(h));
  }
  return out;
}

// ---------------------------------------------------------------------------

const std::vector<double>* DiagramLayout::find(const diagram::PointPath& path) const {
  // paths are sorted lexicographically by fence position
  auto it = std::lower_bound(paths.begin(), paths.end(), path);
  if (it == paths.end() || *it != path) return nullptr;
  return &coords[static_cast<std::size_t>(it - paths.begin())];
}

double DiagramLayout::total_defect() const {
  double t = 0.0;
  for (const AxisReport& a : axes) t += a.fairness.total;
  return t;
}

DiagramLayout diagram_layout(const diagram::Diagram& d, const LayoutOptions& options) {
  DiagramLayout out;
  out.dimension = d.dimension();
  out.paths = {{}};
  out.coords = {{}};
  if (out.dimension == 0) return out;

  ExplodedDiagram e = diagram::explode_base(d);
  for (std::size_t k = 0; k < out.dimension; ++k) {
    if (k > 0) e = diagram::explode_once(e);
    if (e.paths != out.paths) throw InternalError("diagram layout: point order mismatch");
    const ZigzagResult z = zigzag_layout(e, options);
    std::vector<std::size_t> lengths;
    for (const auto& x : e.assignment) lengths.push_back(x.length());
    const ExtendedHeights ext = extend_heights(z.layout, lengths);

    std::vector<diagram::PointPath> paths;
    std::vector<std::vector<double>> coords;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t f = 0; f < ext.heights[i].size(); ++f) {
        diagram::PointPath p = e.paths[i];
        p.push_back(zigzag::PointIndex::from_fence_position(f));
        std::vector<double> c{ext.heights[i][f]};
        c.insert(c.end(), out.coords[i].begin(), out.coords[i].end());
        paths.push_back(std::move(p));
        coords.push_back(std::move(c));
      }
    }
    out.paths = std::move(paths);
    out.coords = std::move(coords);
    out.axes.insert(out.axes.begin(), AxisReport{z.layout.width, z.fairness, z.penalty,
                                                 z.variables, z.constraints});
  }
  return out;
}

}  // namespace zzl::layout
