#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "zzl/error.hpp"

namespace zzl::test {

poset::Poset random_poset(std::mt19937& rng, std::size_t size, double density) {
  std::bernoulli_distribution edge(density);
  poset::Relation r;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a + 1; b < size; ++b) {
      if (edge(rng)) r.push_back({a, b});
    }
  }
  return poset::Poset::from_relation(size, r);
}

std::vector<std::vector<std::size_t>> monotone_maps(const poset::Poset& s, const poset::Poset& t) {
  std::vector<std::vector<std::size_t>> out;
  if (t.size() == 0) {
    if (s.size() == 0) out.push_back({});
    return out;
  }
  std::vector<std::size_t> f(s.size(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < s.size() && ok; ++a) {
      for (std::size_t b = 0; b < s.size() && ok; ++b) {
        if (s.leq(a, b) && !t.leq(f[a], f[b])) ok = false;
      }
    }
    if (ok) out.push_back(f);
    std::size_t k = 0;
    while (k < f.size() && ++f[k] == t.size()) f[k++] = 0;
    if (k == f.size()) break;
  }
  return out;
}

poset::PosetFunctor random_functor(std::mt19937& rng, std::size_t max_index,
                                   std::size_t max_fiber, bool chains) {
  std::uniform_int_distribution<std::size_t> index_size(1, max_index);
  std::uniform_int_distribution<std::size_t> fiber_size(1, max_fiber);
  std::uniform_real_distribution<double> density(0.0, 0.8);
  for (int attempt = 0;; ++attempt) {
    const poset::Poset J = random_poset(rng, index_size(rng), density(rng));
    std::vector<poset::Poset> objects;
    for (std::size_t i = 0; i < J.size(); ++i) {
      const std::size_t size = fiber_size(rng);
      objects.push_back(chains ? poset::Poset::chain(size) : random_poset(rng, size, density(rng)));
    }
    poset::PosetFunctor::Arrows arrows;
    bool ok = true;
    for (auto [a, b] : J.covers()) {
      const auto maps = monotone_maps(objects[a], objects[b]);
      if (maps.empty()) {
        ok = false;
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
      arrows.emplace(std::pair{a, b}, poset::MonotoneFn(objects[a], objects[b], maps[pick(rng)]));
    }
    if (!ok) continue;
    try {
      return poset::PosetFunctor(J, std::move(objects), std::move(arrows));
    } catch (const StructuralError&) {
      // composites disagree along some pair of paths; draw again
    }
  }
}

lp::LinearProgram random_lp(std::mt19937& rng, std::size_t max_vars, std::size_t max_cons) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vars), nc(0, max_cons);
  std::uniform_int_distribution<int> coef(-3, 3), small(0, 3), mode_d(0, 2), rel_d(0, 5);
  std::bernoulli_distribution free_d(0.2), sparse(0.3);
  const int mode = mode_d(rng);
  lp::LinearProgram p;
  const std::size_t n = nv(rng);
  for (std::size_t k = 0; k < n; ++k) p.add_variable("x" + std::to_string(k), free_d(rng));
  std::vector<int> planted(n);
  for (std::size_t k = 0; k < n; ++k) {
    planted[k] = p.variables()[k].free ? coef(rng) : small(rng);
  }
  const std::size_t m = nc(rng);
  for (std::size_t c = 0; c < m; ++c) {
    lp::Linear lhs;
    int at = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (sparse(rng)) continue;
      const int a = coef(rng);
      if (a == 0) continue;
      lhs.push_back({k, static_cast<double>(a)});
      at += a * planted[k];
    }
    const int r = rel_d(rng);
    const lp::Relation rel = r < 3 ? lp::Relation::LessEqual
                             : r < 5 ? lp::Relation::GreaterEqual
                                     : lp::Relation::Equal;
    int rhs;
    if (mode == 0) {
      rhs = at + (rel == lp::Relation::Equal ? 0 : rel == lp::Relation::LessEqual ? small(rng) : -small(rng));
    } else {
      rhs = coef(rng) * 2;
    }
    p.add_constraint(std::move(lhs), rel, rhs);
  }
  // mode 2 keeps all costs nonnegative so both simplex routes get exercised
  lp::Linear obj;
  for (std::size_t k = 0; k < n; ++k) {
    const int c = mode == 2 ? small(rng) : coef(rng);
    if (c != 0) obj.push_back({k, static_cast<double>(c)});
  }
  p.set_objective(std::move(obj));
  return p;
}

std::vector<std::size_t> reg_formula(const simplicial::MonotoneMap& f) {
  const std::size_t n = f.source_size();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= f.target_size(); ++i) {
    std::size_t best = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (f(j) >= i) {
        best = j;
        break;
      }
    }
    out.push_back(best);
  }
  return out;
}

bool hom_formula(const zigzag::ZObject& a, const zigzag::ZObject& b,
                 const simplicial::MonotoneMap& f) {
  if (a.point.singular() && b.point.singular()) return f(a.point.index) == b.point.index;
  if (a.point.singular()) return false;
  const auto r = reg_formula(f);
  const std::size_t i = a.point.index, j = b.point.index;
  if (b.point.regular()) return r[j] == i;
  return r[j] <= i && i <= r[j + 1];
}

std::string injectification_violation(const poset::PosetFunctor& p,
                                      const poset::Injectification& inj) {
  const poset::Poset& J = p.index();
  if (!(inj.hat.index() == J)) return "index shape differs";
  for (std::size_t i = 0; i < J.size(); ++i) {
    const poset::Poset& h = inj.hat.object(i);
    if (!h.check().empty()) return "hat " + std::to_string(i) + " is not a poset";
    if (!inj.epsilon[i].surjective()) return "epsilon " + std::to_string(i) + " is not surjective";
    std::multiset<poset::Element> labels(inj.origin[i].begin(), inj.origin[i].end()), expect;
    for (std::size_t j = 0; j < J.size(); ++j) {
      if (!J.leq(j, i)) continue;
      for (std::size_t x = 0; x < p.object(j).size(); ++x) expect.insert({j, x});
    }
    if (labels != expect) return "carrier of hat " + std::to_string(i);
    for (std::size_t e = 0; e < h.size(); ++e) {
      const poset::Element l = inj.origin[i][e];
      if (inj.epsilon[i](e) != p.composite(l.index, i)[l.element]) {
        return "epsilon " + std::to_string(i) + " disagrees with the label of element " + std::to_string(e);
      }
    }
  }
  for (const auto& [pair, f] : inj.hat.arrows()) {
    const auto [a, b] = pair;
    const std::string where = std::to_string(a) + " -> " + std::to_string(b);
    if (!f.injective()) return "hat arrow " + where + " is not injective";
    for (std::size_t x = 0; x < f.source().size(); ++x) {
      if (!(inj.origin[b][f(x)] == inj.origin[a][x])) return "hat arrow " + where + " moves labels";
      if (inj.epsilon[b](f(x)) != p.arrow(a, b)(inj.epsilon[a](x))) return "naturality at " + where;
    }
  }
  return {};
}

double separation_violation(const poset::PosetFunctor& p, const poset::Injectification& inj,
                            const layout::LayoutProgram& prog, const std::vector<double>& x) {
  const double w = x[prog.width];
  double worst = 0.0;
  for (std::size_t i = 0; i < p.index().size(); ++i) {
    const poset::Poset& h = inj.hat.object(i);
    for (std::size_t a = 0; a < h.size(); ++a) {
      const double va = x[prog.v[i][a]];
      worst = std::max({worst, -va, va - w});
      for (std::size_t b = 0; b < h.size(); ++b) {
        const bool strict = h.less(a, b) || p.object(i).less(inj.epsilon[i](a), inj.epsilon[i](b));
        if (strict) worst = std::max(worst, 1.0 - (x[prog.v[i][b]] - va));
      }
    }
  }
  return worst;
}

std::vector<std::vector<std::string>> svg_wire_xs(const std::string& svg) {
  static const std::regex wire(R"re(class="wire"[^>]* d="([^"]*)")re");
  static const std::regex number(R"(-?[0-9]+\.[0-9]+)");
  std::vector<std::vector<std::string>> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), wire); it != std::sregex_iterator(); ++it) {
    const std::string d = (*it)[1];
    std::vector<std::string> xs;
    bool is_x = true;
    for (auto n = std::sregex_iterator(d.begin(), d.end(), number); n != std::sregex_iterator(); ++n) {
      if (is_x) xs.push_back(n->str());
      is_x = !is_x;
    }
    out.push_back(std::move(xs));
  }
  return out;
}

poset::PosetFunctor collapsing_functor() {
  using poset::MonotoneFn;
  using poset::Poset;
  // c < a, c < b, a < i, b < i; a and b order the two elements of P(c)
  // oppositely
  const Poset J = Poset::from_relation(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const Poset d2 = Poset::discrete(2), c3 = Poset::chain(3), one = Poset::chain(1);
  poset::PosetFunctor::Arrows arrows;
  arrows.emplace(std::pair{std::size_t{0}, std::size_t{1}}, MonotoneFn(d2, c3, {0, 2}));
  arrows.emplace(std::pair{std::size_t{0}, std::size_t{2}}, MonotoneFn(d2, c3, {2, 0}));
  arrows.emplace(std::pair{std::size_t{1}, std::size_t{3}}, MonotoneFn(c3, one, {0, 0, 0}));
  arrows.emplace(std::pair{std::size_t{2}, std::size_t{3}}, MonotoneFn(c3, one, {0, 0, 0}));
  return poset::PosetFunctor(J, {d2, c3, c3, one}, std::move(arrows));
}

std::string golden_dir() { return ZZL_GOLDEN_DIR; }

std::optional<std::string> read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace zzl::test
