#include "zzl/diagram.hpp"

#include <algorithm>
#include <functional>
#include <variant>

#include "zzl/error.hpp"

namespace zzl::diagram {

using simplicial::MonotoneMap;

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(std::vector<Generator> generators,
                     std::vector<std::pair<std::string, std::string>> arrows)
    : generators_(std::move(generators)), arrows_(std::move(arrows)) {
  for (std::size_t k = 0; k < generators_.size(); ++k) by_id_.emplace(generators_[k].id, k);
  arrow_set_.insert(arrows_.begin(), arrows_.end());
}

const Generator* Signature::find(const std::string& id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &generators_[it->second];
}

bool Signature::has_arrow(const std::string& source, const std::string& target) const {
  return source == target || arrow_set_.count({source, target}) != 0;
}

std::vector<std::string> Signature::check() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!seen.insert(g.id).second) out.push_back("duplicate generator '" + g.id + "'");
  }
  std::set<std::pair<std::string, std::string>> seen_arrows;
  for (const auto& [s, t] : arrows_) {
    const Generator* gs = find(s);
    const Generator* gt = find(t);
    if (!gs || !gt) {
      out.push_back("arrow " + s + " -> " + t + " references an unknown generator");
      continue;
    }
    if (!seen_arrows.insert({s, t}).second) {
      out.push_back("duplicate arrow " + s + " -> " + t);
    }
    if (gs->dimension >= gt->dimension) {
      out.push_back("arrow " + s + " -> " + t + " does not increase dimension");
    }
  }
  for (const auto& [a, b] : arrows_) {
    for (const auto& [c, d] : arrows_) {
      if (b == c && !has_arrow(a, d)) {
        out.push_back("arrows " + a + " -> " + b + " -> " + d + " have no composite");
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nodes

struct Diagram::Node {
  struct Point {
    std::string generator;
  };
  struct Zigzag {
    std::vector<Diagram> regular;
    std::vector<Diagram> singular;
    std::vector<DiagramMap> forward;
    std::vector<DiagramMap> backward;
  };
  std::variant<Point, Zigzag> data;
  std::size_t dimension = 0;
};

struct DiagramMap::Node {
  struct Point {
    std::string source;
    std::string target;
  };
  struct Zigzag {
    MonotoneMap singular_map;
    std::vector<DiagramMap> singular_slices;
    std::vector<DiagramMap> regular_slices;
  };
  std::variant<Point, Zigzag> data;
  std::size_t dimension = 0;
};

Diagram Diagram::point(std::string generator) {
  auto node = std::make_shared<Node>();
  node->data = Node::Point{std::move(generator)};
  return Diagram(std::move(node));
}

Diagram Diagram::zigzag(std::vector<Diagram> regular, std::vector<Diagram> singular,
                        std::vector<DiagramMap> forward, std::vector<DiagramMap> backward) {
  if (regular.size() != singular.size() + 1 || forward.size() != singular.size() ||
      backward.size() != singular.size()) {
    throw ValidationError("zigzag needs n singular, n + 1 regular, n forward and n backward "
                          "entries; got " + std::to_string(singular.size()) + ", " +
                          std::to_string(regular.size()) + ", " + std::to_string(forward.size()) +
                          ", " + std::to_string(backward.size()));
  }
  auto node = std::make_shared<Node>();
  node->dimension = regular.front().dimension() + 1;
  node->data = Node::Zigzag{std::move(regular), std::move(singular), std::move(forward),
                            std::move(backward)};
  return Diagram(std::move(node));
}

bool Diagram::is_point() const noexcept {
  return std::holds_alternative<Node::Point>(node_->data);
}

const std::string& Diagram::generator() const {
  if (!is_point()) throw ArgumentError("diagram of dimension > 0 has no generator");
  return std::get<Node::Point>(node_->data).generator;
}

std::size_t Diagram::length() const noexcept {
  if (is_point()) return 0;
  return std::get<Node::Zigzag>(node_->data).singular.size();
}

std::size_t Diagram::dimension() const noexcept { return node_->dimension; }

namespace {
template <class T>
const T& checked_at(const std::vector<T>& v, std::size_t k, const char* what) {
  if (k >= v.size()) {
    throw ArgumentError(std::string(what) + " index " + std::to_string(k) + " out of range");
  }
  return v[k];
}
}  // namespace

const std::vector<Diagram>& Diagram::regulars() const {
  if (is_point()) throw ArgumentError("0-diagram has no regular levels");
  return std::get<Node::Zigzag>(node_->data).regular;
}
const std::vector<Diagram>& Diagram::singulars() const {
  if (is_point()) throw ArgumentError("0-diagram has no singular levels");
  return std::get<Node::Zigzag>(node_->data).singular;
}
const std::vector<DiagramMap>& Diagram::forwards() const {
  if (is_point()) throw ArgumentError("0-diagram has no cospans");
  return std::get<Node::Zigzag>(node_->data).forward;
}
const std::vector<DiagramMap>& Diagram::backwards() const {
  if (is_point()) throw ArgumentError("0-diagram has no cospans");
  return std::get<Node::Zigzag>(node_->data).backward;
}
const Diagram& Diagram::regular(std::size_t j) const { return checked_at(regulars(), j, "regular"); }
const Diagram& Diagram::singular(std::size_t i) const {
  return checked_at(singulars(), i, "singular");
}
const DiagramMap& Diagram::forward(std::size_t i) const {
  return checked_at(forwards(), i, "forward");
}
const DiagramMap& Diagram::backward(std::size_t i) const {
  return checked_at(backwards(), i, "backward");
}

bool operator==(const Diagram& a, const Diagram& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->dimension != b.node_->dimension) return false;
  if (a.is_point() != b.is_point()) return false;
  if (a.is_point()) return a.generator() == b.generator();
  const auto& x = std::get<Diagram::Node::Zigzag>(a.node_->data);
  const auto& y = std::get<Diagram::Node::Zigzag>(b.node_->data);
  return x.singular.size() == y.singular.size() && x.regular == y.regular &&
         x.singular == y.singular && x.forward == y.forward && x.backward == y.backward;
}

DiagramMap DiagramMap::point(std::string source, std::string target) {
  auto node = std::make_shared<Node>();
  node->data = Node::Point{std::move(source), std::move(target)};
  return DiagramMap(std::move(node));
}

DiagramMap DiagramMap::zigzag(MonotoneMap singular_map, std::vector<DiagramMap> singular_slices,
                              std::vector<DiagramMap> regular_slices) {
  if (singular_slices.size() != singular_map.source_size()) {
    throw ValidationError("zigzag map needs one singular slice per source singular level");
  }
  if (regular_slices.size() != singular_map.target_size() + 1) {
    throw ValidationError("zigzag map needs target length + 1 regular slices; got " +
                          std::to_string(regular_slices.size()) + " for target length " +
                          std::to_string(singular_map.target_size()));
  }
  auto node = std::make_shared<Node>();
  node->dimension = regular_slices.front().dimension() + 1;
  node->data = Node::Zigzag{std::move(singular_map), std::move(singular_slices),
                            std::move(regular_slices)};
  return DiagramMap(std::move(node));
}

bool DiagramMap::is_point() const noexcept {
  return std::holds_alternative<Node::Point>(node_->data);
}
const std::string& DiagramMap::source() const {
  if (!is_point()) throw ArgumentError("map of dimension > 0 has no generator source");
  return std::get<Node::Point>(node_->data).source;
}
const std::string& DiagramMap::target() const {
  if (!is_point()) throw ArgumentError("map of dimension > 0 has no generator target");
  return std::get<Node::Point>(node_->data).target;
}
const MonotoneMap& DiagramMap::singular_map() const {
  if (is_point()) throw ArgumentError("0-map has no singular map");
  return std::get<Node::Zigzag>(node_->data).singular_map;
}
MonotoneMap DiagramMap::regular_map() const {
  return simplicial::regularize(singular_map()).map();
}
const std::vector<DiagramMap>& DiagramMap::singular_slices() const {
  if (is_point()) throw ArgumentError("0-map has no slices");
  return std::get<Node::Zigzag>(node_->data).singular_slices;
}
const std::vector<DiagramMap>& DiagramMap::regular_slices() const {
  if (is_point()) throw ArgumentError("0-map has no slices");
  return std::get<Node::Zigzag>(node_->data).regular_slices;
}
const DiagramMap& DiagramMap::singular_slice(std::size_t i) const {
  return checked_at(singular_slices(), i, "singular slice");
}
const DiagramMap& DiagramMap::regular_slice(std::size_t j) const {
  return checked_at(regular_slices(), j, "regular slice");
}
std::size_t DiagramMap::dimension() const noexcept { return node_->dimension; }

bool operator==(const DiagramMap& a, const DiagramMap& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->dimension != b.node_->dimension) return false;
  if (a.is_point() != b.is_point()) return false;
  if (a.is_point()) return a.source() == b.source() && a.target() == b.target();
  const auto& x = std::get<DiagramMap::Node::Zigzag>(a.node_->data);
  const auto& y = std::get<DiagramMap::Node::Zigzag>(b.node_->data);
  return x.singular_map == y.singular_map && x.singular_slices == y.singular_slices &&
         x.regular_slices == y.regular_slices;
}

// ---------------------------------------------------------------------------

std::size_t dimension(const Diagram& d) { return d.dimension(); }

DiagramMap identity_map(const Diagram& d) {
  if (d.is_point()) return DiagramMap::point(d.generator(), d.generator());
  std::vector<DiagramMap> sing, reg;
  for (const auto& s : d.singulars()) sing.push_back(identity_map(s));
  for (const auto& r : d.regulars()) reg.push_back(identity_map(r));
  return DiagramMap::zigzag(simplicial::identity(d.length()), std::move(sing), std::move(reg));
}

DiagramMap compose(const DiagramMap& f, const DiagramMap& g) {
  if (f.is_point() != g.is_point() || f.dimension() != g.dimension()) {
    throw CompositionError("cannot compose maps of different dimensions");
  }
  if (f.is_point()) {
    if (f.target() != g.source()) {
      throw CompositionError("cannot compose " + f.source() + " -> " + f.target() + " with " +
                             g.source() + " -> " + g.target());
    }
    return DiagramMap::point(f.source(), g.target());
  }
  const MonotoneMap fs = f.singular_map();
  const MonotoneMap gs = g.singular_map();
  MonotoneMap hs = simplicial::compose(fs, gs);
  const MonotoneMap gr = g.regular_map();
  std::vector<DiagramMap> sing, reg;
  sing.reserve(fs.source_size());
  for (std::size_t i = 0; i < fs.source_size(); ++i) {
    sing.push_back(compose(f.singular_slice(i), g.singular_slice(fs(i))));
  }
  for (std::size_t k = 0; k <= gs.target_size(); ++k) {
    reg.push_back(compose(f.regular_slice(gr(k)), g.regular_slice(k)));
  }
  return DiagramMap::zigzag(std::move(hs), std::move(sing), std::move(reg));
}

bool map_fits(const DiagramMap& f, const Diagram& source, const Diagram& target) {
  if (f.dimension() != source.dimension() || f.dimension() != target.dimension()) return false;
  if (f.is_point()) return f.source() == source.generator() && f.target() == target.generator();
  const MonotoneMap& fs = f.singular_map();
  if (fs.source_size() != source.length() || fs.target_size() != target.length()) return false;
  const MonotoneMap fr = f.regular_map();
  for (std::size_t i = 0; i < fs.source_size(); ++i) {
    if (!map_fits(f.singular_slice(i), source.singular(i), target.singular(fs(i)))) return false;
  }
  for (std::size_t j = 0; j <= fs.target_size(); ++j) {
    if (!map_fits(f.regular_slice(j), source.regular(fr(j)), target.regular(j))) return false;
  }
  return true;
}

std::string to_string(const PointPath& p) {
  std::string s = "[";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) s += ",";
    s += p[k].to_string();
  }
  return s + "]";
}

const Diagram& subdiagram(const Diagram& d, const PointPath& path) {
  const Diagram* cur = &d;
  for (const auto& p : path) {
    if (cur->is_point() || !p.valid_for(cur->length())) {
      throw ArgumentError("path " + to_string(path) + " does not address a subdiagram");
    }
    cur = &cur->at(p);
  }
  return *cur;
}

// ---------------------------------------------------------------------------
// Validation

std::string Issue::to_string() const { return diagram::to_string(path) + ": " + message; }

namespace {

class Validator {
 public:
  explicit Validator(const Signature& sig) : sig_(sig) {}

  void diagram(const Diagram& d, const PointPath& path) {
    if (d.is_point()) {
      if (!sig_.find(d.generator())) fail(path, "unknown generator '" + d.generator() + "'");
      return;
    }
    const std::size_t n = d.length();
    const std::size_t dim = d.dimension() - 1;
    for (std::size_t j = 0; j <= n; ++j) {
      PointPath sub = path;
      sub.push_back(PointIndex::reg(j));
      if (d.regular(j).dimension() != dim) fail(sub, "dimension mismatch");
      else diagram(d.regular(j), sub);
    }
    for (std::size_t i = 0; i < n; ++i) {
      PointPath sub = path;
      sub.push_back(PointIndex::sing(i));
      if (d.singular(i).dimension() != dim) fail(sub, "dimension mismatch");
      else diagram(d.singular(i), sub);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (d.singular(i).dimension() != dim) continue;
      if (d.regular(i).dimension() == dim) {
        map(d.forward(i), d.regular(i), d.singular(i), path, "forward " + std::to_string(i));
      }
      if (d.regular(i + 1).dimension() == dim) {
        map(d.backward(i), d.regular(i + 1), d.singular(i), path, "backward " + std::to_string(i));
      }
    }
  }

  void map(const DiagramMap& f, const Diagram& x, const Diagram& y, const PointPath& path,
           const std::string& where) {
    if (f.dimension() != x.dimension() || f.dimension() != y.dimension()) {
      fail(path, where + ": map of dimension " + std::to_string(f.dimension()) +
                     " between diagrams of dimension " + std::to_string(x.dimension()));
      return;
    }
    if (f.is_point()) {
      if (f.source() != x.generator() || f.target() != y.generator()) {
        fail(path, where + ": map " + f.source() + " -> " + f.target() + " does not go " +
                       x.generator() + " -> " + y.generator());
      } else if (!sig_.has_arrow(f.source(), f.target())) {
        fail(path, where + ": " + f.source() + " -> " + f.target() +
                       " is not an arrow of the signature");
      }
      return;
    }
    const MonotoneMap& fs = f.singular_map();
    if (fs.source_size() != x.length() || fs.target_size() != y.length()) {
      fail(path, where + ": singular map " + fs.to_string() + " does not go from length " +
                     std::to_string(x.length()) + " to length " + std::to_string(y.length()));
      return;
    }
    // Slice counts are enforced on construction; the parser relies on that.
    const MonotoneMap fr = f.regular_map();
    bool slices_ok = true;
    for (std::size_t i = 0; i < fs.source_size(); ++i) {
      const std::size_t before = issues.size();
      map(f.singular_slice(i), x.singular(i), y.singular(fs(i)), path,
          where + ", singular slice " + std::to_string(i));
      slices_ok = slices_ok && issues.size() == before;
    }
    for (std::size_t j = 0; j <= fs.target_size(); ++j) {
      const std::size_t before = issues.size();
      map(f.regular_slice(j), x.regular(fr(j)), y.regular(j), path,
          where + ", regular slice " + std::to_string(j));
      slices_ok = slices_ok && issues.size() == before;
    }
    if (!slices_ok) return;
    const auto failed = zigzag::check_slice_conditions(fs, [&](const zigzag::SliceCondition& c) {
      return condition_holds(f, x, y, c);
    });
    for (const auto& c : failed) fail(path, where + ": " + c.to_string() + " does not commute");
  }

  std::vector<Issue> issues;

 private:
  static bool condition_holds(const DiagramMap& f, const Diagram& x, const Diagram& y,
                              const zigzag::SliceCondition& c) {
    using Type = zigzag::SliceCondition::Type;
    const std::size_t i = c.target;
    try {
      switch (c.type) {
        case Type::EmptyTriangle:
          return compose(f.regular_slice(i), y.forward(i)) ==
                 compose(f.regular_slice(i + 1), y.backward(i));
        case Type::LowerSquare:
          return compose(f.regular_slice(i), y.forward(i)) ==
                 compose(x.forward(c.lower), f.singular_slice(c.lower));
        case Type::MiddleSpan:
          return compose(x.backward(c.middle), f.singular_slice(c.middle)) ==
                 compose(x.forward(c.middle + 1), f.singular_slice(c.middle + 1));
        case Type::UpperSquare:
          return compose(f.regular_slice(i + 1), y.backward(i)) ==
                 compose(x.backward(c.upper), f.singular_slice(c.upper));
      }
    } catch (const CompositionError&) {
      return false;
    }
    return false;
  }

  void fail(const PointPath& path, std::string message) {
    issues.push_back({path, std::move(message)});
  }

  const Signature& sig_;
};

}  // namespace

std::vector<Issue> validate(const Diagram& d, const Signature& sig) {
  Validator v(sig);
  for (const auto& problem : sig.check()) v.issues.push_back({{}, "signature: " + problem});
  v.diagram(d, {});
  return std::move(v.issues);
}

std::vector<Issue> validate_map(const DiagramMap& f, const Diagram& source, const Diagram& target,
                                const Signature& sig) {
  Validator v(sig);
  v.map(f, source, target, {}, "map");
  return std::move(v.issues);
}

// ---------------------------------------------------------------------------
// Points and explosion

std::vector<PointPath> points(const Diagram& d, std::size_t k) {
  if (k > d.dimension()) {
    throw ArgumentError("points: k = " + std::to_string(k) + " exceeds dimension " +
                        std::to_string(d.dimension()));
  }
  std::vector<PointPath> out;
  PointPath prefix;
  std::function<void(const Diagram&, std::size_t)> walk = [&](const Diagram& cur,
                                                               std::size_t left) {
    if (left == 0) {
      out.push_back(prefix);
      return;
    }
    for (const auto& p : zigzag::points(cur.length())) {
      prefix.push_back(p);
      walk(cur.at(p), left - 1);
      prefix.pop_back();
    }
  };
  walk(d, k);
  return out;
}

std::optional<std::size_t> ExplodedDiagram::index_of(const PointPath& p) const {
  auto key = [](const PointPath& a, const PointPath& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  auto it = std::lower_bound(paths.begin(), paths.end(), p, key);
  if (it == paths.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - paths.begin());
}

ExplodedDiagram explode_base(const Diagram& d) {
  ExplodedDiagram e;
  e.depth = 0;
  e.base = poset::Poset::discrete(1);
  e.paths = {PointPath{}};
  e.assignment = {d};
  e.functorial = true;
  return e;
}

namespace {

using Key = std::pair<std::size_t, std::size_t>;

void verify_functorial(const ExplodedDiagram& e,
                       const std::vector<std::pair<Key, DiagramMap>>& generators) {
  const std::size_t n = e.size();
  std::vector<std::vector<std::pair<std::size_t, const DiagramMap*>>> preds(n);
  for (const auto& [key, f] : generators) preds[key.second].push_back({key.first, &f});
  std::vector<std::optional<DiagramMap>> composite(n * n);
  for (std::size_t t : e.base.linear_extension()) {
    composite[t * n + t] = identity_map(e.assignment[t]);
    for (std::size_t s = 0; s < n; ++s) {
      if (!e.base.less(s, t)) continue;
      auto& slot = composite[s * n + t];
      for (const auto& [u, f] : preds[t]) {
        if (!e.base.leq(s, u)) continue;
        DiagramMap candidate = [&] {
          try {
            return compose(*composite[s * n + u], *f);
          } catch (const CompositionError& err) {
            throw StructuralError("explosion: maps do not compose from " + to_string(e.paths[s]) +
                                  " to " + to_string(e.paths[t]) + ": " + err.what());
          }
        }();
        if (!slot) {
          slot = std::move(candidate);
        } else if (!(*slot == candidate)) {
          throw StructuralError("explosion is not functorial: composites from " +
                                to_string(e.paths[s]) + " to " + to_string(e.paths[t]) +
                                " differ");
        }
      }
    }
  }
}

}  // namespace

ExplodedDiagram explode_once(const ExplodedDiagram& e) {
  ExplodedDiagram out;
  out.depth = e.depth + 1;
  std::vector<std::size_t> offset(e.size() + 1, 0);
  for (std::size_t a = 0; a < e.size(); ++a) {
    const Diagram& x = e.assignment[a];
    if (x.is_point()) {
      throw ArgumentError("explode: value at " + to_string(e.paths[a]) + " has dimension 0");
    }
    offset[a + 1] = offset[a] + 2 * x.length() + 1;
    for (const auto& p : zigzag::points(x.length())) {
      PointPath path = e.paths[a];
      path.push_back(p);
      out.paths.push_back(std::move(path));
      out.assignment.push_back(x.at(p));
    }
  }
  auto element = [&](std::size_t a, PointIndex p) { return offset[a] + p.fence_position(); };

  std::vector<std::pair<Key, DiagramMap>> generators;
  for (std::size_t a = 0; a < e.size(); ++a) {
    const Diagram& x = e.assignment[a];
    for (std::size_t i = 0; i < x.length(); ++i) {
      generators.push_back(
          {{element(a, PointIndex::reg(i)), element(a, PointIndex::sing(i))}, x.forward(i)});
      generators.push_back(
          {{element(a, PointIndex::reg(i + 1)), element(a, PointIndex::sing(i))}, x.backward(i)});
    }
  }
  for (const auto& [key, f] : e.arrows) {
    const auto [a, b] = key;
    if (f.is_point()) throw ArgumentError("explode: arrow of dimension 0");
    const MonotoneMap& fs = f.singular_map();
    const MonotoneMap fr = f.regular_map();
    if (fs.source_size() != e.assignment[a].length() ||
        fs.target_size() != e.assignment[b].length()) {
      throw StructuralError("explode: arrow " + to_string(e.paths[a]) + " -> " +
                            to_string(e.paths[b]) + " has the wrong singular map");
    }
    for (std::size_t i = 0; i < fs.source_size(); ++i) {
      generators.push_back({{element(a, PointIndex::sing(i)), element(b, PointIndex::sing(fs(i)))},
                            f.singular_slice(i)});
    }
    for (std::size_t j = 0; j <= fs.target_size(); ++j) {
      generators.push_back({{element(a, PointIndex::reg(fr(j))), element(b, PointIndex::reg(j))},
                            f.regular_slice(j)});
    }
  }

  poset::Relation rel;
  for (const auto& g : generators) rel.push_back(g.first);
  try {
    out.base = poset::Poset::from_relation(out.paths.size(), rel);
  } catch (const ArgumentError& err) {
    throw StructuralError(std::string("explosion base is not a poset: ") + err.what());
  }
  std::map<Key, const DiagramMap*> by_key;
  for (const auto& [key, f] : generators) {
    auto [it, inserted] = by_key.emplace(key, &f);
    if (!inserted && !(*it->second == f)) {
      throw StructuralError("explosion has two different arrows from " +
                            to_string(out.paths[key.first]) + " to " +
                            to_string(out.paths[key.second]));
    }
  }
  for (const auto& cover : out.base.covers()) {
    auto it = by_key.find(cover);
    if (it == by_key.end()) {
      throw InternalError("explosion cover is not a generating arrow");
    }
    out.arrows.emplace(cover, *it->second);
  }
  verify_functorial(out, generators);
  out.functorial = true;
  return out;
}

ExplodedDiagram explode(const Diagram& d, std::size_t k) {
  if (k < 1 || k > d.dimension()) {
    throw ArgumentError("explode: k = " + std::to_string(k) + " must lie in [1, " +
                        std::to_string(d.dimension()) + "]");
  }
  ExplodedDiagram e = explode_base(d);
  for (std::size_t level = 0; level < k; ++level) e = explode_once(e);
  return e;
}

}  // namespace zzl::diagram
