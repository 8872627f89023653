#pragma once

// Exact rational linear programming with checkable certificates.
//
// Certificate conventions (min c·x unless noted):
//
//   dual y (one entry per constraint): y_i >= 0 on ">=" rows, y_i <= 0 on
//   "<=" rows, free on "=" rows. The reduced costs d = c - A^T y are charged
//   against the variable bounds: d_j > 0 needs a finite lower bound, d_j < 0 a
//   finite upper bound. The dual value is b·y + Σ_j d_j·(bound picked by the
//   sign of d_j). For maximization every sign above flips.
//
//   Farkas weights w (one per constraint): w_i >= 0 on inequality rows, free
//   on "=" rows. Each row is taken in "<=" orientation (">=" rows negated) and
//   the weighted sum g·x <= h must be violated by every x inside the variable
//   bounds, i.e. min over the bounds of g·x > h.
//
//   unbounded ray r with a feasible point p: A r respects each row's relation
//   with right-hand side 0, r stays inside the recession cone of the bounds,
//   and c·r < 0 (> 0 when maximizing).

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ucf/rational.hpp"

namespace ucf::lp {

/// A solver result failed its own exact certificate check. Always a bug.
class CertificateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class Sense { kMinimize, kMaximize };

using Coefficients = std::map<std::string, BigRational>;
/// Total map variable name -> value.
using Assignment = std::map<std::string, BigRational>;

const char* to_string(Relation r);

struct LinearConstraint {
  std::string label;
  Coefficients coefficients;
  Relation relation = Relation::kLessEqual;
  BigRational rhs;
};

struct VariableBounds {
  std::optional<BigRational> lower;
  std::optional<BigRational> upper;

  static VariableBounds nonnegative() { return {BigRational(0), std::nullopt}; }
  static VariableBounds free() { return {}; }
};

class LinearProgram {
 public:
  /// Throws std::invalid_argument for duplicate names, names with
  /// whitespace, or lower > upper.
  void add_variable(const std::string& name, VariableBounds bounds = VariableBounds::nonnegative());
  void set_bounds(const std::string& name, VariableBounds bounds);

  /// Throws std::invalid_argument for undeclared variables.
  void set_objective(Coefficients objective, Sense sense);

  /// Zero coefficients are dropped; a constraint with no nonzero coefficient
  /// or an undeclared variable throws std::invalid_argument. Returns the row
  /// index.
  std::size_t add_constraint(LinearConstraint constraint);
  void set_rhs(std::size_t row, BigRational rhs);

  [[nodiscard]] const std::vector<std::string>& variables() const { return variables_; }
  [[nodiscard]] bool has_variable(const std::string& name) const { return index_.count(name) != 0; }
  [[nodiscard]] std::size_t variable_index(const std::string& name) const;
  [[nodiscard]] const VariableBounds& bounds(const std::string& name) const;
  [[nodiscard]] const VariableBounds& bounds(std::size_t j) const { return bounds_.at(j); }
  [[nodiscard]] const Coefficients& objective() const { return objective_; }
  [[nodiscard]] Sense sense() const { return sense_; }
  [[nodiscard]] const std::vector<LinearConstraint>& constraints() const { return constraints_; }
  [[nodiscard]] std::optional<std::size_t> find_constraint(const std::string& label) const;

 private:
  void require_declared(const Coefficients& coefficients) const;

  std::vector<std::string> variables_;
  std::map<std::string, std::size_t> index_;
  std::vector<VariableBounds> bounds_;
  Coefficients objective_;
  Sense sense_ = Sense::kMinimize;
  std::vector<LinearConstraint> constraints_;
};

struct Optimal {
  BigRational value;
  Assignment assignment;
  std::vector<BigRational> dual;
};

struct Infeasible {
  std::vector<BigRational> farkas;
};

struct Unbounded {
  Assignment point;
  Assignment ray;
};

using LpOutcome = std::variant<Optimal, Infeasible, Unbounded>;

/// Two-phase primal simplex on a dense exact tableau with Bland's rule.
/// Deterministic for a given program; the returned certificate always
/// satisfies the matching verify_* check.
LpOutcome solve(const LinearProgram& lp);

BigRational objective_value(const LinearProgram& lp, const Assignment& assignment);

/// Every constraint and bound holds exactly. Missing variables throw
/// std::invalid_argument.
bool check_feasible(const LinearProgram& lp, const Assignment& assignment);

/// Dual value of y under the conventions above; nullopt when y is not dual
/// feasible (wrong signs or a reduced cost pushing against a missing bound).
std::optional<BigRational> dual_value(const LinearProgram& lp, const std::vector<BigRational>& dual);

/// Primal feasible, dual feasible, equal objective values.
bool verify_optimality(const LinearProgram& lp, const Assignment& primal, const std::vector<BigRational>& dual);

bool verify_infeasibility(const LinearProgram& lp, const std::vector<BigRational>& farkas);

bool verify_unbounded(const LinearProgram& lp, const Assignment& point, const Assignment& ray);

/// Dispatches to the verify_* routine matching the outcome.
bool verify_outcome(const LinearProgram& lp, const LpOutcome& outcome);

}  // namespace ucf::lp
