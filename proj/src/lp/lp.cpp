#include "zzl/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zzl/error.hpp"
#include "zzl/lp_kernels.hpp"

namespace zzl::lp {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::LessEqual: return "<=";
    case Relation::Equal: return "=";
    case Relation::GreaterEqual: return ">=";
  }
  return "?";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
  }
  return "?";
}

std::size_t LinearProgram::add_variable(std::string name, bool free) {
  variables_.push_back({std::move(name), free});
  return variables_.size() - 1;
}

void LinearProgram::add_constraint(Linear lhs, Relation relation, double rhs) {
  constraints_.push_back({std::move(lhs), relation, rhs});
}

void LinearProgram::set_objective(Linear objective) { objective_ = std::move(objective); }

void LinearProgram::add_objective_term(std::size_t variable, double coefficient) {
  objective_.push_back({variable, coefficient});
}

std::optional<std::size_t> LinearProgram::find(const std::string& name) const {
  for (std::size_t j = 0; j < variables_.size(); ++j) {
    if (variables_[j].name == name) return j;
  }
  return std::nullopt;
}

void LinearProgram::check() const {
  auto check_linear = [&](const Linear& l, const std::string& where) {
    for (const Term& t : l) {
      if (t.variable >= variables_.size()) {
        throw ArgumentError(where + ": unknown variable " + std::to_string(t.variable));
      }
      if (!std::isfinite(t.coefficient)) throw ArgumentError(where + ": non-finite coefficient");
    }
  };
  check_linear(objective_, "objective");
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    const std::string where = "constraint " + std::to_string(i);
    check_linear(constraints_[i].lhs, where);
    if (!std::isfinite(constraints_[i].rhs)) throw ArgumentError(where + ": non-finite constant");
  }
}

namespace {

double dot(const Linear& l, const std::vector<double>& x) {
  double s = 0.0;
  for (const Term& t : l) s += t.coefficient * x[t.variable];
  return s;
}

}  // namespace

double LinearProgram::violation(const std::vector<double>& x) const {
  if (x.size() != variables_.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t j = 0; j < variables_.size(); ++j) {
    if (!variables_[j].free) worst = std::max(worst, -x[j]);
  }
  for (const Constraint& c : constraints_) {
    const double lhs = dot(c.lhs, x);
    switch (c.relation) {
      case Relation::LessEqual: worst = std::max(worst, lhs - c.rhs); break;
      case Relation::GreaterEqual: worst = std::max(worst, c.rhs - lhs); break;
      case Relation::Equal: worst = std::max(worst, std::abs(lhs - c.rhs)); break;
    }
  }
  return worst;
}

double LinearProgram::evaluate(const std::vector<double>& x) const { return dot(objective_, x); }

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

class Simplex {
 public:
  Simplex(const LinearProgram& lp, const SolveOptions& opt)
      : lp_(lp), opt_(opt), k_(kernels::active()) {
    build();
  }

  LpSolution run() {
    LpSolution out;
    if (dual_) {
      phase_two_objective();
      if (!dual_iterate(out.pivots)) {
        out.status = Status::Infeasible;
        return out;
      }
      return extract(out);
    }
    if (artificials_ > 0) {
      phase_one_objective();
      iterate(structural_ + slacks_ + artificials_, out.pivots);
      const double infeasibility = -obj()[rhs_col()];
      if (infeasibility > opt_.feasibility_tolerance * scale_) {
        out.status = Status::Infeasible;
        return out;
      }
      drive_out_artificials(out.pivots);
    }
    phase_two_objective();
    if (!iterate(structural_ + slacks_, out.pivots)) {
      out.status = Status::Unbounded;
      return out;
    }
    return extract(out);
  }

 private:
  LpSolution& extract(LpSolution& out) {
    out.status = Status::Optimal;
    std::vector<double> column_value(structural_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (active_[r] && basis_[r] < structural_) {
        column_value[basis_[r]] = std::max(0.0, row(r)[rhs_col()]);
      }
    }
    out.assignment.assign(lp_.variable_count(), 0.0);
    for (std::size_t j = 0; j < lp_.variable_count(); ++j) {
      double v = column_value[positive_[j]];
      if (negative_[j] != npos) v -= column_value[negative_[j]];
      out.assignment[j] = v;
    }
    out.objective = lp_.evaluate(out.assignment);
    return out;
  }

  std::size_t rhs_col() const { return cols_ - 1; }
  double* row(std::size_t r) { return data_.data() + r * cols_; }
  double* obj() { return row(rows_); }

  void build() {
    const auto& vars = lp_.variables();
    positive_.resize(vars.size());
    negative_.assign(vars.size(), npos);
    for (std::size_t j = 0; j < vars.size(); ++j) {
      positive_[j] = structural_++;
      if (vars[j].free) negative_[j] = structural_++;
    }
    // With a nonnegative cost vector the all-slack basis is dual feasible and
    // the dual simplex needs no artificial variables.
    std::vector<double> cost(structural_, 0.0);
    for (const Term& t : lp_.objective()) {
      cost[positive_[t.variable]] += t.coefficient;
      if (negative_[t.variable] != npos) cost[negative_[t.variable]] -= t.coefficient;
    }
    dual_ = opt_.method == Method::Automatic &&
            std::all_of(cost.begin(), cost.end(), [](double c) { return c >= 0.0; });
    if (dual_) {
      build_dual();
      return;
    }
    const auto& cons = lp_.constraints();
    rows_ = cons.size();
    std::vector<Relation> rel(rows_);
    std::vector<double> sign(rows_, 1.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      rel[i] = cons[i].relation;
      if (cons[i].rhs < 0) {
        sign[i] = -1.0;
        if (rel[i] == Relation::LessEqual) rel[i] = Relation::GreaterEqual;
        else if (rel[i] == Relation::GreaterEqual) rel[i] = Relation::LessEqual;
      }
      if (rel[i] != Relation::Equal) ++slacks_;
      if (rel[i] != Relation::LessEqual) ++artificials_;
    }
    cols_ = structural_ + slacks_ + artificials_ + 1;
    data_.assign((rows_ + 1) * cols_, 0.0);
    basis_.assign(rows_, npos);
    active_.assign(rows_, 1);
    std::size_t slack = structural_, art = structural_ + slacks_;
    for (std::size_t i = 0; i < rows_; ++i) {
      double* t = row(i);
      for (const Term& term : cons[i].lhs) {
        const double a = sign[i] * term.coefficient;
        t[positive_[term.variable]] += a;
        if (negative_[term.variable] != npos) t[negative_[term.variable]] -= a;
      }
      t[rhs_col()] = sign[i] * cons[i].rhs;
      scale_ = std::max(scale_, std::abs(cons[i].rhs));
      switch (rel[i]) {
        case Relation::LessEqual:
          t[slack] = 1.0;
          basis_[i] = slack++;
          break;
        case Relation::GreaterEqual:
          t[slack++] = -1.0;
          t[art] = 1.0;
          basis_[i] = art++;
          break;
        case Relation::Equal:
          t[art] = 1.0;
          basis_[i] = art++;
          break;
      }
    }
  }

  /// Every row in <= form with its slack basic; equalities become two rows.
  void build_dual() {
    const auto& cons = lp_.constraints();
    rows_ = 0;
    for (const Constraint& c : cons) rows_ += c.relation == Relation::Equal ? 2 : 1;
    slacks_ = rows_;
    cols_ = structural_ + slacks_ + 1;
    data_.assign((rows_ + 1) * cols_, 0.0);
    basis_.assign(rows_, npos);
    active_.assign(rows_, 1);
    std::size_t r = 0;
    auto emit = [&](const Constraint& c, double sign) {
      double* t = row(r);
      for (const Term& term : c.lhs) {
        const double a = sign * term.coefficient;
        t[positive_[term.variable]] += a;
        if (negative_[term.variable] != npos) t[negative_[term.variable]] -= a;
      }
      t[rhs_col()] = sign * c.rhs;
      t[structural_ + r] = 1.0;
      basis_[r] = structural_ + r;
      ++r;
    };
    for (const Constraint& c : cons) {
      scale_ = std::max(scale_, std::abs(c.rhs));
      if (c.relation != Relation::GreaterEqual) emit(c, 1.0);
      if (c.relation != Relation::LessEqual) emit(c, -1.0);
    }
  }

  /// Dual simplex from a dual feasible basis. Leaving row by most negative
  /// right-hand side, switching to the smallest basic index while pivots are
  /// dual degenerate. Returns false when the program is infeasible.
  bool dual_iterate(std::size_t& pivots) {
    const std::size_t cap = 50 * (rows_ + cols_) + 1000;
    const std::size_t allowed = structural_ + slacks_;
    const double tol = opt_.feasibility_tolerance * scale_;
    bool bland = false;
    for (std::size_t it = 0; it < cap; ++it) {
      std::size_t r = npos;
      double worst = -tol;
      for (std::size_t i = 0; i < rows_; ++i) {
        const double b = row(i)[rhs_col()];
        if (b >= -tol) continue;
        if (bland) {
          if (r == npos || basis_[i] < basis_[r]) r = i;
        } else if (b < worst) {
          worst = b;
          r = i;
        }
      }
      if (r == npos) return true;

      const double* t = row(r);
      const double* z = obj();
      std::size_t q = npos;
      double ratio = 0.0;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (t[j] >= -opt_.pivot_tolerance) continue;
        const double rt = std::max(0.0, z[j]) / -t[j];
        if (q == npos || rt < ratio) {
          q = j;
          ratio = rt;
        }
      }
      if (q == npos) return false;
      bland = ratio <= opt_.optimality_tolerance;
      pivot(r, q);
      ++pivots;
    }
    throw InternalError("dual simplex: iteration limit reached");
  }

  void phase_one_objective() {
    double* z = obj();
    std::fill(z, z + cols_, 0.0);
    for (std::size_t a = structural_ + slacks_; a < structural_ + slacks_ + artificials_; ++a) {
      z[a] = 1.0;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] >= structural_ + slacks_) k_.axpy(z, row(r), 1.0, cols_);
    }
  }

  void phase_two_objective() {
    double* z = obj();
    std::fill(z, z + cols_, 0.0);
    for (const Term& t : lp_.objective()) {
      z[positive_[t.variable]] += t.coefficient;
      if (negative_[t.variable] != npos) z[negative_[t.variable]] -= t.coefficient;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!active_[r]) continue;
      const double c = basis_[r] < structural_ ? z[basis_[r]] : 0.0;
      if (c != 0.0) k_.axpy(z, row(r), c, cols_);
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (active_[r]) z[basis_[r]] = 0.0;
    }
  }

  void pivot(std::size_t r, std::size_t q) {
    double* pr = row(r);
    const double p = pr[q];
    k_.scale(pr, 1.0 / p, cols_);
    pr[q] = 1.0;
    // Columns beyond the last nonzero of the pivot row are left unchanged.
    std::size_t lo = 0, hi = cols_;
    while (lo < hi && pr[lo] == 0.0) ++lo;
    while (hi > lo && pr[hi - 1] == 0.0) --hi;
    for (std::size_t k = 0; k <= rows_; ++k) {
      if (k == r || (k < rows_ && !active_[k])) continue;
      double* t = row(k);
      const double f = t[q];
      if (f == 0.0) continue;
      k_.axpy(t + lo, pr + lo, f, hi - lo);
      t[q] = 0.0;
    }
    basis_[r] = q;
  }

  /// Returns false on unboundedness.
  bool iterate(std::size_t allowed, std::size_t& pivots) {
    const std::size_t cap = 50 * (rows_ + cols_) + 1000;
    bool bland = false;
    for (std::size_t it = 0; it < cap; ++it) {
      const double* z = obj();
      std::size_t q = npos;
      double best = -opt_.optimality_tolerance;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (z[j] < best) {
          q = j;
          if (bland) break;
          best = z[j];
        }
      }
      if (q == npos) return true;

      std::size_t r = npos;
      double ratio = 0.0;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!active_[i]) continue;
        const double* t = row(i);
        const double a = t[q];
        if (a <= opt_.pivot_tolerance) continue;
        const double rt = std::max(0.0, t[rhs_col()]) / a;
        if (r == npos || rt < ratio || (rt == ratio && basis_[i] < basis_[r])) {
          r = i;
          ratio = rt;
        }
      }
      if (r == npos) return false;
      bland = ratio <= opt_.feasibility_tolerance;
      pivot(r, q);
      ++pivots;
    }
    throw InternalError("simplex: iteration limit reached");
  }

  void drive_out_artificials(std::size_t& pivots) {
    const std::size_t first_art = structural_ + slacks_;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (basis_[r] < first_art) continue;
      const double* t = row(r);
      std::size_t q = npos;
      double best = opt_.pivot_tolerance;
      for (std::size_t j = 0; j < first_art; ++j) {
        if (std::abs(t[j]) > best) {
          best = std::abs(t[j]);
          q = j;
        }
      }
      if (q == npos) {
        active_[r] = 0;  // redundant row
      } else {
        pivot(r, q);
        ++pivots;
      }
    }
  }

  const LinearProgram& lp_;
  SolveOptions opt_;
  const kernels::Kernels& k_;
  bool dual_ = false;
  std::size_t structural_ = 0, slacks_ = 0, artificials_ = 0;
  std::size_t rows_ = 0, cols_ = 0;
  double scale_ = 1.0;
  std::vector<std::size_t> positive_, negative_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
  std::vector<char> active_;
};

}  // namespace

LpSolution solve(const LinearProgram& lp, const SolveOptions& options) {
  lp.check();
  return Simplex(lp, options).run();
}

}  // namespace zzl::lp
