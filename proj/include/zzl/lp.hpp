#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace zzl::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Status { Optimal, Infeasible, Unbounded };

const char* to_string(Relation r);
const char* to_string(Status s);

struct Term {
  std::size_t variable;
  double coefficient;
};
using Linear = std::vector<Term>;

struct Variable {
  std::string name;
  /// Lower bound 0 unless free.
  bool free = false;
};

struct Constraint {
  Linear lhs;
  Relation relation;
  double rhs;
};

class LinearProgram {
 public:
  std::size_t add_variable(std::string name, bool free = false);
  void add_constraint(Linear lhs, Relation relation, double rhs);
  void set_objective(Linear objective);
  void add_objective_term(std::size_t variable, double coefficient);

  const std::vector<Variable>& variables() const noexcept { return variables_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
  const Linear& objective() const noexcept { return objective_; }
  std::size_t variable_count() const noexcept { return variables_.size(); }
  std::size_t constraint_count() const noexcept { return constraints_.size(); }
  std::optional<std::size_t> find(const std::string& name) const;

  /// Throws ArgumentError on dangling variable references or non-finite numbers.
  void check() const;

  /// Largest violation of constraints and bounds by `x` (0 when feasible).
  double violation(const std::vector<double>& x) const;
  double evaluate(const std::vector<double>& x) const;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  Linear objective_;
};

struct LpSolution {
  Status status = Status::Infeasible;
  /// Indexed like the program's variables; empty unless Optimal.
  std::vector<double> assignment;
  double objective = 0.0;
  std::size_t pivots = 0;
};

enum class Method {
  /// Dual simplex from the slack basis when every cost is nonnegative,
  /// otherwise two-phase primal.
  Automatic,
  TwoPhase,
};

struct SolveOptions {
  Method method = Method::Automatic;
  double feasibility_tolerance = 1e-9;
  double optimality_tolerance = 1e-9;
  double pivot_tolerance = 1e-9;
};

/// Dense tableau simplex: two-phase primal, or the dual method when the slack
/// basis is dual feasible. Dantzig-style pricing, switching to Bland's rule
/// while pivots are degenerate. Deterministic for a given program.
LpSolution solve(const LinearProgram& lp, const SolveOptions& options = {});

/// Exact rational vertex (and extreme ray) enumeration. At most 8 variables
/// and 16 constraints, otherwise ArgumentError.
LpSolution brute_force(const LinearProgram& lp);

/// CPLEX-style LP text: Minimize / Subject To / Bounds / End.
std::string to_lp_text(const LinearProgram& lp);
/// Throws ParseError with a line location.
LinearProgram parse_lp_text(const std::string& text);

}  // namespace zzl::lp
