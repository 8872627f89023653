#include "ucf/ratlp.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ucf::lp {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::kLessEqual: return "<=";
    case Relation::kGreaterEqual: return ">=";
    case Relation::kEqual: return "=";
  }
  return "?";
}

void LinearProgram::add_variable(const std::string& name, VariableBounds bounds) {
  if (name.empty() || std::any_of(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); })) {
    throw std::invalid_argument("invalid variable name '" + name + "'");
  }
  if (index_.count(name)) throw std::invalid_argument("variable '" + name + "' declared twice");
  if (bounds.lower && bounds.upper && *bounds.lower > *bounds.upper) {
    throw std::invalid_argument("variable '" + name + "' has lower bound above upper bound");
  }
  index_.emplace(name, variables_.size());
  variables_.push_back(name);
  bounds_.push_back(std::move(bounds));
}

void LinearProgram::set_bounds(const std::string& name, VariableBounds bounds) {
  if (bounds.lower && bounds.upper && *bounds.lower > *bounds.upper) {
    throw std::invalid_argument("variable '" + name + "' has lower bound above upper bound");
  }
  bounds_.at(variable_index(name)) = std::move(bounds);
}

std::size_t LinearProgram::variable_index(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("undeclared variable '" + name + "'");
  return it->second;
}

const VariableBounds& LinearProgram::bounds(const std::string& name) const { return bounds_[variable_index(name)]; }

void LinearProgram::require_declared(const Coefficients& coefficients) const {
  for (const auto& [name, coef] : coefficients) (void)variable_index(name);
}

void LinearProgram::set_objective(Coefficients objective, Sense sense) {
  require_declared(objective);
  std::erase_if(objective, [](const auto& e) { return e.second.is_zero(); });
  objective_ = std::move(objective);
  sense_ = sense;
}

std::size_t LinearProgram::add_constraint(LinearConstraint constraint) {
  require_declared(constraint.coefficients);
  std::erase_if(constraint.coefficients, [](const auto& e) { return e.second.is_zero(); });
  if (constraint.coefficients.empty()) {
    throw std::invalid_argument("constraint '" + constraint.label + "' has no nonzero coefficient");
  }
  if (std::any_of(constraint.label.begin(), constraint.label.end(),
                  [](unsigned char c) { return std::isspace(c); })) {
    throw std::invalid_argument("constraint label '" + constraint.label + "' contains whitespace");
  }
  if (constraint.label.empty()) constraint.label = "r" + std::to_string(constraints_.size());
  constraints_.push_back(std::move(constraint));
  return constraints_.size() - 1;
}

void LinearProgram::set_rhs(std::size_t row, BigRational rhs) { constraints_.at(row).rhs = std::move(rhs); }

std::optional<std::size_t> LinearProgram::find_constraint(const std::string& label) const {
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    if (constraints_[i].label == label) return i;
  }
  return std::nullopt;
}

namespace {

const BigRational& value_of(const Assignment& assignment, const std::string& name) {
  const auto it = assignment.find(name);
  if (it == assignment.end()) throw std::invalid_argument("assignment misses variable '" + name + "'");
  return it->second;
}

BigRational row_activity(const LinearConstraint& row, const Assignment& assignment) {
  BigRational sum;
  for (const auto& [name, coef] : row.coefficients) sum += coef * value_of(assignment, name);
  return sum;
}

bool relation_holds(Relation rel, const BigRational& lhs, const BigRational& rhs) {
  switch (rel) {
    case Relation::kLessEqual: return lhs <= rhs;
    case Relation::kGreaterEqual: return lhs >= rhs;
    case Relation::kEqual: return lhs == rhs;
  }
  return false;
}

// A^T y as a dense vector over the program's variable order.
std::vector<BigRational> transpose_times(const LinearProgram& lp, const std::vector<BigRational>& y) {
  std::vector<BigRational> out(lp.variables().size());
  const auto& rows = lp.constraints();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (y[i].is_zero()) continue;
    for (const auto& [name, coef] : rows[i].coefficients) out[lp.variable_index(name)] += coef * y[i];
  }
  return out;
}

}  // namespace

BigRational objective_value(const LinearProgram& lp, const Assignment& assignment) {
  BigRational sum;
  for (const auto& [name, coef] : lp.objective()) sum += coef * value_of(assignment, name);
  return sum;
}

bool check_feasible(const LinearProgram& lp, const Assignment& assignment) {
  for (const auto& name : lp.variables()) {
    const BigRational& v = value_of(assignment, name);
    const auto& b = lp.bounds(name);
    if ((b.lower && v < *b.lower) || (b.upper && v > *b.upper)) return false;
  }
  return std::all_of(lp.constraints().begin(), lp.constraints().end(), [&](const LinearConstraint& row) {
    return relation_holds(row.relation, row_activity(row, assignment), row.rhs);
  });
}

std::optional<BigRational> dual_value(const LinearProgram& lp, const std::vector<BigRational>& dual) {
  const auto& rows = lp.constraints();
  if (dual.size() != rows.size()) return std::nullopt;
  // Maximization is checked as minimization of -c with multipliers -y.
  const int flip = lp.sense() == Sense::kMaximize ? -1 : 1;
  BigRational value;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int s = dual[i].sign() * flip;
    if (rows[i].relation == Relation::kGreaterEqual && s < 0) return std::nullopt;
    if (rows[i].relation == Relation::kLessEqual && s > 0) return std::nullopt;
    value += dual[i] * rows[i].rhs;
  }
  const auto aty = transpose_times(lp, dual);
  for (std::size_t j = 0; j < lp.variables().size(); ++j) {
    const auto it = lp.objective().find(lp.variables()[j]);
    const BigRational reduced = (it == lp.objective().end() ? BigRational(0) : it->second) - aty[j];
    const int s = reduced.sign() * flip;
    if (s == 0) continue;
    const auto& bound = s > 0 ? lp.bounds(j).lower : lp.bounds(j).upper;
    if (!bound) return std::nullopt;
    value += reduced * *bound;
  }
  return value;
}

bool verify_optimality(const LinearProgram& lp, const Assignment& primal, const std::vector<BigRational>& dual) {
  if (!check_feasible(lp, primal)) return false;
  const auto dv = dual_value(lp, dual);
  return dv && *dv == objective_value(lp, primal);
}

bool verify_infeasibility(const LinearProgram& lp, const std::vector<BigRational>& farkas) {
  const auto& rows = lp.constraints();
  if (farkas.size() != rows.size()) return false;
  // Fold every row into "<=" orientation: g·x <= h.
  std::vector<BigRational> oriented(rows.size());
  BigRational h;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].relation != Relation::kEqual && farkas[i].sign() < 0) return false;
    oriented[i] = rows[i].relation == Relation::kGreaterEqual ? -farkas[i] : farkas[i];
    h += oriented[i] * rows[i].rhs;
  }
  const auto g = transpose_times(lp, oriented);
  BigRational least;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (g[j].is_zero()) continue;
    const auto& bound = g[j].sign() > 0 ? lp.bounds(j).lower : lp.bounds(j).upper;
    if (!bound) return false;
    least += g[j] * *bound;
  }
  return least > h;
}

bool verify_unbounded(const LinearProgram& lp, const Assignment& point, const Assignment& ray) {
  if (!check_feasible(lp, point)) return false;
  for (const auto& name : lp.variables()) {
    const BigRational& r = value_of(ray, name);
    const auto& b = lp.bounds(name);
    if ((b.lower && r.sign() < 0) || (b.upper && r.sign() > 0)) return false;
  }
  for (const auto& row : lp.constraints()) {
    if (!relation_holds(row.relation, row_activity(row, ray), BigRational(0))) return false;
  }
  const int improving = objective_value(lp, ray).sign();
  return lp.sense() == Sense::kMinimize ? improving < 0 : improving > 0;
}

bool verify_outcome(const LinearProgram& lp, const LpOutcome& outcome) {
  if (const auto* opt = std::get_if<Optimal>(&outcome)) {
    return verify_optimality(lp, opt->assignment, opt->dual) && objective_value(lp, opt->assignment) == opt->value;
  }
  if (const auto* inf = std::get_if<Infeasible>(&outcome)) return verify_infeasibility(lp, inf->farkas);
  const auto& unb = std::get<Unbounded>(outcome);
  return verify_unbounded(lp, unb.point, unb.ray);
}

}  // namespace ucf::lp
