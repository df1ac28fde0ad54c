#include <boost/multiprecision/gmp.hpp>
#include <functional>

#include "zzl/error.hpp"
#include "zzl/lp.hpp"

namespace zzl::lp {

namespace {

using Q = boost::multiprecision::mpq_rational;
using Vec = std::vector<Q>;

struct Row {
  Vec a;
  Relation rel;
  Q b;
};

/// Row-reduces `m` (each row: n coefficients, optionally one extra column)
/// in place; returns the pivot columns among the first n.
std::vector<std::size_t> rref(std::vector<Vec>& m, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Q inv = 1 / m[r][c];
    for (Q& x : m[r]) x *= inv;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == r || m[k][c] == 0) continue;
      const Q f = m[k][c];
      for (std::size_t x = 0; x < m[k].size(); ++x) m[k][x] -= f * m[r][x];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Basis of { x | a.x = 0 for every row }.
std::vector<Vec> kernel(std::vector<Vec> m, std::size_t n) {
  const std::vector<std::size_t> pivots = rref(m, n);
  std::vector<char> is_pivot(n, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Q dot(const Vec& a, const Vec& x) {
  Q s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * x[k];
  return s;
}

bool satisfies(const Row& r, const Q& lhs, const Q& b) {
  switch (r.rel) {
    case Relation::LessEqual: return lhs <= b;
    case Relation::GreaterEqual: return lhs >= b;
    case Relation::Equal: return lhs == b;
  }
  return false;
}

/// Rows in echelon form, each with a unit pivot and the rhs in the last
/// column. Rows are never back-substituted until a solution is read off.
struct Echelon {
  std::size_t n;
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;

  /// Reduces `v` against the rows and appends it; false if it is dependent.
  /// `consistent` reports whether a dependent row agrees on the rhs.
  bool add(Vec v, bool* consistent = nullptr) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Q f = v[pivots[k]];
      if (f == 0) continue;
      for (std::size_t x = 0; x <= n; ++x) v[x] -= f * rows[k][x];
    }
    std::size_t p = 0;
    while (p < n && v[p] == 0) ++p;
    if (p == n) {
      if (consistent) *consistent = v[n] == 0;
      return false;
    }
    const Q inv = 1 / v[p];
    for (Q& x : v) x *= inv;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }

  void pop() {
    rows.pop_back();
    pivots.pop_back();
  }

  /// Solution with the free column (if any) set to `free_value`, the rhs
  /// scaled by `rhs_scale`.
  Vec solve(const Q& rhs_scale, std::size_t free_column, const Q& free_value) const {
    Vec x(n, 0);
    if (free_column < n) x[free_column] = free_value;
    for (std::size_t k = rows.size(); k-- > 0;) {
      Q s = rhs_scale * rows[k][n];
      for (std::size_t c = pivots[k] + 1; c < n; ++c) {
        if (rows[k][c] != 0) s -= rows[k][c] * x[c];
      }
      x[pivots[k]] = s;
    }
    return x;
  }
};

/// Visits every `k`-subset of `candidates` whose rows extend `e`
/// independently, with `e` holding the extended system. Dependent prefixes
/// are pruned.
void independent_subsets(Echelon& e, const std::vector<Vec>& candidates, std::size_t start,
                         std::size_t k, const std::function<void(const Echelon&)>& visit) {
  if (k == 0) {
    visit(e);
    return;
  }
  for (std::size_t i = start; i + k <= candidates.size(); ++i) {
    if (!e.add(candidates[i])) continue;
    independent_subsets(e, candidates, i + 1, k - 1, visit);
    e.pop();
  }
}

}  // namespace

LpSolution brute_force(const LinearProgram& lp) {
  lp.check();
  const std::size_t n = lp.variable_count();
  if (n > 8 || lp.constraint_count() > 16) {
    throw ArgumentError("brute_force: at most 8 variables and 16 constraints");
  }
  std::vector<Row> rows;
  for (const Constraint& c : lp.constraints()) {
    Row r{Vec(n, 0), c.relation, Q(c.rhs)};
    for (const Term& t : c.lhs) r.a[t.variable] += Q(t.coefficient);
    rows.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.variables()[j].free) continue;
    Row r{Vec(n, 0), Relation::GreaterEqual, Q(0)};
    r.a[j] = 1;
    rows.push_back(std::move(r));
  }
  Vec c(n, 0);
  for (const Term& t : lp.objective()) c[t.variable] += Q(t.coefficient);

  // Quotient by the lineality space so that the polyhedron is pointed.
  std::vector<Vec> all;
  for (const Row& r : rows) all.push_back(r.a);
  bool objective_on_lineality = false;
  for (const Vec& l : kernel(all, n)) {
    if (dot(c, l) != 0) objective_on_lineality = true;
    rows.push_back({l, Relation::Equal, Q(0)});
  }

  // Equalities fix the affine hull; candidates are the inequality rows.
  LpSolution out;
  Echelon base{n, {}, {}};
  std::vector<Vec> candidates, directions;
  for (const Row& r : rows) {
    Vec v = r.a;
    v.push_back(r.b);
    if (r.rel == Relation::Equal) {
      bool consistent = true;
      if (!base.add(std::move(v), &consistent) && !consistent) {
        out.status = Status::Infeasible;
        return out;
      }
    } else {
      candidates.push_back(std::move(v));
    }
  }
  const std::size_t eq_rank = base.rows.size();

  bool found = false;
  Q best = 0;
  Vec best_x;
  if (n >= eq_rank) {
    Echelon e = base;
    independent_subsets(e, candidates, 0, n - eq_rank, [&](const Echelon& sys) {
      Vec x = sys.solve(Q(1), n, Q(0));
      for (const Row& r : rows) {
        if (!satisfies(r, dot(r.a, x), r.b)) return;
      }
      const Q value = dot(c, x);
      if (!found || value < best) {
        found = true;
        best = value;
        best_x = std::move(x);
      }
    });
  }
  if (!found) {
    out.status = Status::Infeasible;
    return out;
  }
  if (objective_on_lineality) {
    out.status = Status::Unbounded;
    return out;
  }

  // Extreme rays of the recession cone: one-dimensional kernels of the
  // homogenized systems.
  bool unbounded = false;
  if (n >= eq_rank + 1) {
    Echelon e = base;
    for (Vec& r : e.rows) r[n] = 0;
    independent_subsets(e, candidates, 0, n - eq_rank - 1, [&](const Echelon& sys) {
      if (unbounded) return;
      std::vector<char> is_pivot(n, 0);
      for (std::size_t p : sys.pivots) is_pivot[p] = 1;
      std::size_t free_column = 0;
      while (is_pivot[free_column]) ++free_column;
      const Vec ray = sys.solve(Q(0), free_column, Q(1));
      for (int sign : {1, -1}) {
        Vec d = ray;
        for (Q& x : d) x *= sign;
        if (dot(c, d) >= 0) continue;
        bool in_cone = true;
        for (const Row& r : rows) {
          if (!satisfies(r, dot(r.a, d), Q(0))) {
            in_cone = false;
            break;
          }
        }
        if (in_cone) unbounded = true;
      }
    });
  }
  if (unbounded) {
    out.status = Status::Unbounded;
    return out;
  }
  out.status = Status::Optimal;
  out.assignment.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.assignment[j] = best_x[j].convert_to<double>();
  out.objective = best.convert_to<double>();
  return out;
}

}  // namespace zzl::lp
