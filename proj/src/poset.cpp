#include "zzl/poset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace zzl::poset {

namespace {

// Warshall closure on a dense 0/1 matrix, reflexive.
void close_transitively(std::size_t n, std::vector<std::uint8_t>& m) {
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i * n + k]) continue;
      const std::uint8_t* row_k = &m[k * n];
      std::uint8_t* row_i = &m[i * n];
      for (std::size_t j = 0; j < n; ++j) row_i[j] |= row_k[j];
    }
  }
}

std::string pair_string(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

Poset Poset::from_relation(std::size_t size, const Relation& generators) {
  std::vector<std::uint8_t> m(size * size, 0);
  for (auto [a, b] : generators) {
    if (a >= size || b >= size) {
      throw ArgumentError("relation " + pair_string(a, b) + " out of range");
    }
    m[a * size + b] = 1;
  }
  close_transitively(size, m);
  Poset p = from_matrix(size, std::move(m));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a + 1; b < size; ++b) {
      if (p.leq(a, b) && p.leq(b, a)) {
        throw ArgumentError("relation is not antisymmetric at " +
                            pair_string(a, b));
      }
    }
  }
  return p;
}

Poset Poset::from_matrix(std::size_t size, std::vector<std::uint8_t> leq) {
  if (leq.size() != size * size) {
    throw ArgumentError("order matrix has the wrong size");
  }
  Poset p;
  p.size_ = size;
  p.leq_ = std::move(leq);
  return p;
}

Poset Poset::discrete(std::size_t size) { return from_relation(size, {}); }

Poset Poset::chain(std::size_t size) {
  std::vector<std::uint8_t> m(size * size, 0);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a; b < size; ++b) m[a * size + b] = 1;
  }
  return from_matrix(size, std::move(m));
}

Relation Poset::covers() const {
  Relation out;
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < size_ && cover; ++c) {
        if (less(a, c) && less(c, b)) cover = false;
      }
      if (cover) out.emplace_back(a, b);
    }
  }
  return out;
}

Relation Poset::strict_pairs() const {
  Relation out;
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (less(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size_; ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < size_ && minimal; ++b) {
      if (less(b, a)) minimal = false;
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

std::vector<std::size_t> Poset::strictly_below(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < size_; ++j) {
    if (less(j, i)) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> Poset::linear_extension() const {
  std::vector<std::size_t> indegree(size_, 0);
  const Relation cs = covers();
  std::vector<std::vector<std::size_t>> succ(size_);
  for (auto [a, b] : cs) {
    ++indegree[b];
    succ[a].push_back(b);
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t a = 0; a < size_; ++a) {
    if (indegree[a] == 0) ready.push(a);
  }
  std::vector<std::size_t> out;
  out.reserve(size_);
  while (!ready.empty()) {
    const std::size_t a = ready.top();
    ready.pop();
    out.push_back(a);
    for (std::size_t b : succ[a]) {
      if (--indegree[b] == 0) ready.push(b);
    }
  }
  return out;
}

std::string Poset::check() const {
  for (std::size_t a = 0; a < size_; ++a) {
    if (!leq(a, a)) return "not reflexive at " + std::to_string(a);
  }
  for (std::size_t a = 0; a < size_; ++a) {
    for (std::size_t b = 0; b < size_; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) {
        return "not antisymmetric at " + pair_string(a, b);
      }
      if (!leq(a, b)) continue;
      for (std::size_t c = 0; c < size_; ++c) {
        if (leq(b, c) && !leq(a, c)) {
          return "not transitive at " + pair_string(a, b) + ", " +
                 pair_string(b, c);
        }
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

MonotoneFn::MonotoneFn(Poset source, Poset target, std::vector<std::size_t> mapping)
    : source_(std::move(source)), target_(std::move(target)), mapping_(std::move(mapping)) {
  if (mapping_.size() != source_.size()) {
    throw ArgumentError("monotone function: mapping size " +
                        std::to_string(mapping_.size()) + " != source size " +
                        std::to_string(source_.size()));
  }
  for (std::size_t x : mapping_) {
    if (x >= target_.size()) throw ArgumentError("monotone function: value out of range");
  }
  for (std::size_t a = 0; a < source_.size(); ++a) {
    for (std::size_t b = 0; b < source_.size(); ++b) {
      if (source_.leq(a, b) && !target_.leq(mapping_[a], mapping_[b])) {
        throw ArgumentError("monotone function: order violated at " +
                            pair_string(a, b));
      }
    }
  }
}

MonotoneFn MonotoneFn::identity(const Poset& p) {
  std::vector<std::size_t> m(p.size());
  std::iota(m.begin(), m.end(), std::size_t{0});
  return MonotoneFn(p, p, std::move(m));
}

bool MonotoneFn::injective() const {
  std::vector<std::uint8_t> hit(target_.size(), 0);
  for (std::size_t x : mapping_) {
    if (hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

bool MonotoneFn::surjective() const {
  std::vector<std::uint8_t> hit(target_.size(), 0);
  for (std::size_t x : mapping_) hit[x] = 1;
  return std::all_of(hit.begin(), hit.end(), [](std::uint8_t h) { return h != 0; });
}

MonotoneFn compose(const MonotoneFn& f, const MonotoneFn& g) {
  if (!(f.target() == g.source())) {
    throw CompositionError("monotone functions are not composable");
  }
  std::vector<std::size_t> m(f.source().size());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = g(f(x));
  return MonotoneFn(f.source(), g.target(), std::move(m));
}

// ---------------------------------------------------------------------------

PosetFunctor::PosetFunctor(Poset index, std::vector<Poset> objects, Arrows arrows)
    : index_(std::move(index)), objects_(std::move(objects)), arrows_(std::move(arrows)) {
  const std::size_t n = index_.size();
  if (objects_.size() != n) {
    throw StructuralError("functor has " + std::to_string(objects_.size()) +
                          " objects for an index of size " + std::to_string(n));
  }
  const Relation cs = index_.covers();
  const std::set<std::pair<std::size_t, std::size_t>> cover_set(cs.begin(), cs.end());
  for (const auto& [key, fn] : arrows_) {
    if (!cover_set.count(key)) {
      throw StructuralError("arrow " + pair_string(key.first, key.second) +
                            " is not a covering pair of the index");
    }
    if (!(fn.source() == objects_[key.first]) || !(fn.target() == objects_[key.second])) {
      throw StructuralError("arrow " + pair_string(key.first, key.second) +
                            " has the wrong source or target");
    }
  }
  for (const auto& key : cs) {
    if (!arrows_.count(key)) {
      throw StructuralError("missing arrow for covering pair " +
                            pair_string(key.first, key.second));
    }
  }

  std::vector<std::vector<std::size_t>> preds(n);
  for (auto [a, b] : cs) preds[b].push_back(a);
  composites_.assign(n * n, {});
  for (std::size_t j : index_.linear_extension()) {
    auto& self = composites_[j * n + j];
    self.resize(objects_[j].size());
    std::iota(self.begin(), self.end(), std::size_t{0});
    for (std::size_t i = 0; i < n; ++i) {
      if (!index_.less(i, j)) continue;
      bool first = true;
      std::vector<std::size_t>& out = composites_[i * n + j];
      for (std::size_t u : preds[j]) {
        if (!index_.leq(i, u)) continue;
        const auto& inner = composites_[i * n + u];
        const MonotoneFn& step = arrows_.at({u, j});
        std::vector<std::size_t> candidate(inner.size());
        for (std::size_t x = 0; x < inner.size(); ++x) candidate[x] = step(inner[x]);
        if (first) {
          out = std::move(candidate);
          first = false;
        } else if (candidate != out) {
          throw StructuralError("functor is not path-independent from " +
                                std::to_string(i) + " to " + std::to_string(j));
        }
      }
    }
  }
}

const MonotoneFn& PosetFunctor::arrow(std::size_t i, std::size_t j) const {
  auto it = arrows_.find({i, j});
  if (it == arrows_.end()) {
    throw ArgumentError("no arrow for pair " + pair_string(i, j));
  }
  return it->second;
}

const std::vector<std::size_t>& PosetFunctor::composite(std::size_t i, std::size_t j) const {
  if (!index_.leq(i, j)) {
    throw ArgumentError("indices " + pair_string(i, j) + " are not comparable");
  }
  return composites_[i * index_.size() + j];
}

// ---------------------------------------------------------------------------

Reflection poset_reflection(std::size_t size, const Relation& relation) {
  std::vector<std::uint8_t> m(size * size, 0);
  for (auto [a, b] : relation) {
    if (a >= size || b >= size) {
      throw ArgumentError("relation " + pair_string(a, b) + " out of range");
    }
    m[a * size + b] = 1;
  }
  close_transitively(size, m);

  Reflection out;
  out.quotient.assign(size, size);
  std::size_t classes = 0;
  for (std::size_t a = 0; a < size; ++a) {
    if (out.quotient[a] != size) continue;
    for (std::size_t b = a; b < size; ++b) {
      if (m[a * size + b] && m[b * size + a]) {
        out.quotient[b] = classes;
        if (b != a) out.collapsed = true;
      }
    }
    ++classes;
  }
  std::vector<std::uint8_t> q(classes * classes, 0);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (m[a * size + b]) q[out.quotient[a] * classes + out.quotient[b]] = 1;
    }
  }
  out.poset = Poset::from_matrix(classes, std::move(q));
  return out;
}

const std::vector<std::size_t>& Colimit::leg(std::size_t index) const {
  auto it = std::lower_bound(shape.begin(), shape.end(), index);
  if (it == shape.end() || *it != index) {
    throw ArgumentError("index " + std::to_string(index) + " is not in the colimit shape");
  }
  return legs[static_cast<std::size_t>(it - shape.begin())];
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // the smaller member stays the root
  }
};

using ObjectFn = std::function<const Poset&(std::size_t)>;
using ArrowFn = std::function<const MonotoneFn&(std::size_t, std::size_t)>;

Colimit colimit_impl(const Poset& index, std::vector<std::size_t> shape,
                     const ObjectFn& object, const ArrowFn& arrow) {
  std::sort(shape.begin(), shape.end());
  shape.erase(std::unique(shape.begin(), shape.end()), shape.end());
  std::vector<std::uint8_t> in_shape(index.size(), 0);
  for (std::size_t s : shape) in_shape.at(s) = 1;
  for (std::size_t s : shape) {
    for (std::size_t t = 0; t < index.size(); ++t) {
      if (index.less(t, s) && !in_shape[t]) {
        throw ArgumentError("colimit shape is not downward closed");
      }
    }
  }

  std::vector<std::size_t> offset(shape.size() + 1, 0);
  for (std::size_t k = 0; k < shape.size(); ++k) {
    offset[k + 1] = offset[k] + object(shape[k]).size();
  }
  std::vector<std::size_t> position(index.size(), 0);
  for (std::size_t k = 0; k < shape.size(); ++k) position[shape[k]] = k;

  const std::size_t total = offset.back();
  UnionFind uf(total);
  for (auto [a, b] : index.covers()) {
    if (!in_shape[a] || !in_shape[b]) continue;
    const MonotoneFn& f = arrow(a, b);
    for (std::size_t x = 0; x < f.source().size(); ++x) {
      uf.unite(offset[position[a]] + x, offset[position[b]] + f(x));
    }
  }
  // Number union-find classes by their smallest member.
  std::vector<std::size_t> class_of(total), root_class(total, total);
  std::size_t classes = 0;
  for (std::size_t e = 0; e < total; ++e) {
    const std::size_t r = uf.find(e);
    if (root_class[r] == total) root_class[r] = classes++;
    class_of[e] = root_class[r];
  }
  Relation rel;
  for (std::size_t k = 0; k < shape.size(); ++k) {
    for (auto [x, y] : object(shape[k]).covers()) {
      rel.emplace_back(class_of[offset[k] + x], class_of[offset[k] + y]);
    }
  }
  Reflection refl = poset_reflection(classes, rel);

  Colimit out;
  out.poset = std::move(refl.poset);
  out.shape = shape;
  out.legs.resize(shape.size());
  out.representatives.assign(out.poset.size(), Element{index.size(), 0});
  std::vector<std::uint8_t> have_rep(out.poset.size(), 0);
  for (std::size_t k = 0; k < shape.size(); ++k) {
    const std::size_t size = object(shape[k]).size();
    auto& leg = out.legs[k];
    leg.resize(size);
    for (std::size_t x = 0; x < size; ++x) {
      const std::size_t c = refl.quotient[class_of[offset[k] + x]];
      leg[x] = c;
      if (!have_rep[c]) {
        // shape is sorted and elements are visited in order, so the first
        // member seen is the minimum (index, element).
        out.representatives[c] = Element{shape[k], x};
        have_rep[c] = 1;
      }
    }
    std::vector<std::size_t> sorted = leg;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      out.non_injective.push_back(shape[k]);
    }
  }
  return out;
}

}  // namespace

Colimit colimit(const PosetFunctor& functor, std::vector<std::size_t> shape) {
  return colimit_impl(
      functor.index(), std::move(shape),
      [&](std::size_t i) -> const Poset& { return functor.object(i); },
      [&](std::size_t i, std::size_t j) -> const MonotoneFn& { return functor.arrow(i, j); });
}

std::optional<MonotoneFn> mediate(const Colimit& colim, const Poset& target,
                                  const std::vector<std::vector<std::size_t>>& legs) {
  if (legs.size() != colim.shape.size()) return std::nullopt;
  const std::size_t none = target.size();
  std::vector<std::size_t> mapping(colim.poset.size(), none);
  for (std::size_t k = 0; k < legs.size(); ++k) {
    if (legs[k].size() != colim.legs[k].size()) return std::nullopt;
    for (std::size_t x = 0; x < legs[k].size(); ++x) {
      const std::size_t c = colim.legs[k][x];
      const std::size_t v = legs[k][x];
      if (v >= target.size()) return std::nullopt;
      if (mapping[c] == none) {
        mapping[c] = v;
      } else if (mapping[c] != v) {
        return std::nullopt;
      }
    }
  }
  for (std::size_t c = 0; c < mapping.size(); ++c) {
    if (mapping[c] == none) return std::nullopt;
  }
  for (std::size_t a = 0; a < mapping.size(); ++a) {
    for (std::size_t b = 0; b < mapping.size(); ++b) {
      if (colim.poset.leq(a, b) && !target.leq(mapping[a], mapping[b])) return std::nullopt;
    }
  }
  return MonotoneFn(colim.poset, target, std::move(mapping));
}

// ---------------------------------------------------------------------------

Factorization factorize_mono_epi(const MonotoneFn& p) {
  const Poset& c = p.source();
  const Poset& x = p.target();
  const std::size_t nc = c.size();
  const std::size_t nx = x.size();
  Relation gen;
  for (auto [a, b] : c.covers()) gen.emplace_back(a, b);
  for (auto [a, b] : x.covers()) gen.emplace_back(nc + a, nc + b);
  for (std::size_t e = 0; e < nc; ++e) {
    for (std::size_t y = 0; y < nx; ++y) {
      if (x.less(p(e), y)) gen.emplace_back(e, nc + y);
      if (x.less(y, p(e))) gen.emplace_back(nc + y, e);
    }
  }
  Poset middle;
  try {
    middle = Poset::from_relation(nc + nx, gen);
  } catch (const ArgumentError& e) {
    throw InternalError(std::string("mono-epi factorization is not a poset: ") + e.what());
  }
  std::vector<std::size_t> left(nc), right(nc + nx);
  std::iota(left.begin(), left.end(), std::size_t{0});
  for (std::size_t e = 0; e < nc; ++e) right[e] = p(e);
  for (std::size_t y = 0; y < nx; ++y) right[nc + y] = y;
  Factorization out{middle, MonotoneFn(c, middle, std::move(left)),
                    MonotoneFn(middle, x, std::move(right))};
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(xs[k]);
  }
  return s;
}

}  // namespace

InjectificationError::InjectificationError(std::size_t index, std::vector<std::size_t> offending)
    : Error("injectification: colimit below index " + std::to_string(index) +
            " has non-injective cocone legs at indices {" + join(offending) + "}"),
      index_(index),
      offending_(std::move(offending)) {}

LiftError::LiftError(std::size_t index, const std::string& reason)
    : Error("lift undefined at index " + std::to_string(index) + ": " + reason), index_(index) {}

std::optional<std::size_t> Injectification::find(std::size_t i, Element label) const {
  const auto& labels = origin.at(i);
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

Injectification injectify(const PosetFunctor& p) {
  const Poset& J = p.index();
  const std::size_t n = J.size();
  Injectification out;
  out.order = J.linear_extension();
  std::vector<Poset> hat(n);
  out.epsilon.resize(n);
  out.origin.resize(n);
  PosetFunctor::Arrows hat_arrows;

  for (std::size_t i : out.order) {
    const std::vector<std::size_t> below = J.strictly_below(i);
    if (below.empty()) {
      hat[i] = p.object(i);
      out.epsilon[i] = MonotoneFn::identity(p.object(i));
      for (std::size_t x = 0; x < p.object(i).size(); ++x) out.origin[i].push_back({i, x});
      continue;
    }
    Colimit colim = colimit_impl(
        J, below, [&](std::size_t j) -> const Poset& { return hat[j]; },
        [&](std::size_t a, std::size_t b) -> const MonotoneFn& { return hat_arrows.at({a, b}); });
    if (!colim.injective()) throw InjectificationError(i, colim.non_injective);

    // Label each colimit element by the label of its representative.
    std::vector<Element> colim_labels(colim.poset.size());
    for (std::size_t c = 0; c < colim.poset.size(); ++c) {
      const Element rep = colim.representatives[c];
      colim_labels[c] = out.origin[rep.index][rep.element];
    }
    for (std::size_t k = 0; k < colim.shape.size(); ++k) {
      const std::size_t j = colim.shape[k];
      for (std::size_t x = 0; x < colim.legs[k].size(); ++x) {
        if (!(colim_labels[colim.legs[k][x]] == out.origin[j][x])) {
          throw InternalError("injectification: colimit identified distinct labels below " +
                              std::to_string(i));
        }
      }
    }

    std::vector<std::vector<std::size_t>> legs(colim.shape.size());
    for (std::size_t k = 0; k < colim.shape.size(); ++k) {
      const std::size_t j = colim.shape[k];
      const auto& to_i = p.composite(j, i);
      legs[k].resize(hat[j].size());
      for (std::size_t x = 0; x < hat[j].size(); ++x) legs[k][x] = to_i[out.epsilon[j](x)];
    }
    std::optional<MonotoneFn> mediating = mediate(colim, p.object(i), legs);
    if (!mediating) {
      throw InternalError("injectification: no mediating map into index " + std::to_string(i));
    }
    Factorization fac = factorize_mono_epi(*mediating);
    hat[i] = fac.middle;
    out.epsilon[i] = fac.right;
    out.origin[i] = colim_labels;
    for (std::size_t x = 0; x < p.object(i).size(); ++x) out.origin[i].push_back({i, x});

    for (auto [a, b] : J.covers()) {
      if (b != i) continue;
      const auto& leg = colim.leg(a);
      std::vector<std::size_t> m(leg.size());
      for (std::size_t x = 0; x < leg.size(); ++x) m[x] = fac.left(leg[x]);
      hat_arrows.emplace(std::make_pair(a, i), MonotoneFn(hat[a], hat[i], std::move(m)));
    }
  }
  out.hat = PosetFunctor(J, std::move(hat), std::move(hat_arrows));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<MonotoneFn> lift(const PosetFunctor& p, const Injectification& hat_p,
                             const PosetFunctor& q, const Injectification& hat_q,
                             const std::vector<MonotoneFn>& alpha) {
  const Poset& J = p.index();
  if (!(q.index() == J)) throw ArgumentError("lift: functors have different index posets");
  if (hat_p.order != hat_q.order) {
    throw ArgumentError("lift: injectifications use different linear extensions");
  }
  if (alpha.size() != J.size()) throw ArgumentError("lift: alpha has the wrong number of components");
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (!(alpha[i].source() == p.object(i)) || !(alpha[i].target() == q.object(i))) {
      throw ArgumentError("lift: component " + std::to_string(i) + " has the wrong type");
    }
  }
  for (auto [a, b] : J.covers()) {
    if (compose(p.arrow(a, b), alpha[b]) != compose(alpha[a], q.arrow(a, b))) {
      throw ArgumentError("lift: alpha is not natural at (" + std::to_string(a) + ", " +
                          std::to_string(b) + ")");
    }
  }

  std::vector<MonotoneFn> lifted(J.size());
  for (std::size_t i : hat_p.order) {
    const std::vector<std::size_t> below = J.strictly_below(i);
    if (below.empty()) {
      lifted[i] = MonotoneFn(hat_p.hat.object(i), hat_q.hat.object(i),
                             std::vector<std::size_t>(alpha[i].mapping().begin(),
                                                      alpha[i].mapping().end()));
      continue;
    }
    Colimit cp = colimit(hat_p.hat, below);
    Colimit cq = colimit(hat_q.hat, below);
    std::vector<std::vector<std::size_t>> legs(cp.shape.size());
    for (std::size_t k = 0; k < cp.shape.size(); ++k) {
      const std::size_t j = cp.shape[k];
      const auto& qleg = cq.leg(j);
      legs[k].resize(cp.legs[k].size());
      for (std::size_t x = 0; x < legs[k].size(); ++x) legs[k][x] = qleg[lifted[j](x)];
    }
    std::optional<MonotoneFn> induced = mediate(cp, cq.poset, legs);
    if (!induced) throw LiftError(i, "no induced map between colimits");

    const std::size_t ncp = cp.poset.size();
    const std::size_t ncq = cq.poset.size();
    for (std::size_t c = 0; c < ncp; ++c) {
      if (hat_q.epsilon[i]((*induced)(c)) != alpha[i](hat_p.epsilon[i](c))) {
        throw LiftError(i, "mediating square does not commute");
      }
    }
    std::vector<std::size_t> m(hat_p.hat.object(i).size());
    for (std::size_t c = 0; c < ncp; ++c) m[c] = (*induced)(c);
    for (std::size_t x = 0; x < p.object(i).size(); ++x) m[ncp + x] = ncq + alpha[i](x);
    try {
      lifted[i] = MonotoneFn(hat_p.hat.object(i), hat_q.hat.object(i), std::move(m));
    } catch (const ArgumentError&) {
      throw LiftError(i, "a strict cross pair is sent to an equal pair");
    }
  }
  return lifted;
}

// ---------------------------------------------------------------------------

std::string check_injectification(const PosetFunctor& p, const Injectification& inj) {
  const Poset& J = p.index();
  std::ostringstream err;
  for (const auto& [key, fn] : inj.hat.arrows()) {
    if (!fn.injective()) {
      err << "hat arrow " << pair_string(key.first, key.second) << " is not injective";
      return err.str();
    }
    for (std::size_t x = 0; x < fn.source().size(); ++x) {
      if (!(inj.origin[key.second][fn(x)] == inj.origin[key.first][x])) {
        err << "hat arrow " << pair_string(key.first, key.second) << " does not preserve labels";
        return err.str();
      }
    }
  }
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (!inj.epsilon[i].surjective()) {
      err << "epsilon " << i << " is not surjective";
      return err.str();
    }
    if (!(inj.epsilon[i].source() == inj.hat.object(i)) ||
        !(inj.epsilon[i].target() == p.object(i))) {
      err << "epsilon " << i << " has the wrong type";
      return err.str();
    }
  }
  for (auto [a, b] : J.covers()) {
    const MonotoneFn& h = inj.hat.arrow(a, b);
    const MonotoneFn& f = p.arrow(a, b);
    for (std::size_t x = 0; x < h.source().size(); ++x) {
      if (inj.epsilon[b](h(x)) != f(inj.epsilon[a](x))) {
        err << "naturality fails on " << pair_string(a, b);
        return err.str();
      }
    }
  }
  for (std::size_t i = 0; i < J.size(); ++i) {
    std::vector<Element> expected;
    for (std::size_t j = 0; j < J.size(); ++j) {
      if (!J.leq(j, i)) continue;
      for (std::size_t x = 0; x < p.object(j).size(); ++x) expected.push_back({j, x});
    }
    std::vector<Element> actual = inj.origin[i];
    std::sort(actual.begin(), actual.end());
    if (actual != expected) {
      err << "carrier of hat " << i << " is not the disjoint union of P(j), j <= i";
      return err.str();
    }
    for (std::size_t e = 0; e < actual.size(); ++e) {
      const Element lab = inj.origin[i][e];
      if (lab.index == i && inj.epsilon[i](e) != lab.element) {
        err << "epsilon " << i << " is not the identity on the copy of P(" << i << ")";
        return err.str();
      }
    }
  }
  return {};
}

}  // namespace zzl::poset
