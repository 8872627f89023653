#pragma once

// Linear programs over the trace counts q_T of a minimal 2-good set S with
// f_2 <= 1/3, and the lemma-derived constraint families attached to them.
//
// The elements of S are referred to by role: a = 1, b = 2, c = 3, d = 4,
// e = 5, so a subset T ⊆ S is a SubsetMask over {1..s}. The variable for T is
// named "q{...}" with the role letters of T, e.g. "q{}", "q{a}", "q{abd}".
// The set count m is not a variable; it is substituted by Σ_T q_T, and every
// "<= m/3" row is multiplied through by 3.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ucf/ratlp.hpp"
#include "ucf/setfam.hpp"

namespace ucf::model {

enum class Scenario { kBase, kC0, kC1, kC2, kC3Plus, kAuxBC };

const char* to_string(Scenario scenario);

struct CaseSpec {
  int s = 4;
  Scenario scenario = Scenario::kBase;
  /// The x-flexible element.
  ElementId a = 1;
  /// Roles covered by x.
  SubsetMask covered;

  /// Canonical roles: a = 1, C = {b}, {b,c}, {b,c,d}; the auxiliary program
  /// uses {b,c}. covered_count overrides |C| for C3Plus (3 or, for s = 5, 4).
  static CaseSpec make(int s, Scenario scenario, std::optional<int> covered_count = std::nullopt);

  /// Throws std::invalid_argument if roles or scenario do not fit s.
  void validate() const;
};

struct CaseResult {
  CaseSpec spec;
  lp::LinearProgram program;
  lp::LpOutcome outcome;

  [[nodiscard]] bool infeasible() const { return std::holds_alternative<lp::Infeasible>(outcome); }
  /// Optimal value; nullopt when infeasible. Throws std::logic_error if unbounded.
  [[nodiscard]] std::optional<BigRational> bound() const;
  /// "81", "237/2" or "infeasible".
  [[nodiscard]] std::string bound_text() const;
};

/// "a", "b", ... for roles 1, 2, ...
char role_letter(ElementId role);
/// "q{abd}"
std::string variable_name(SubsetMask t);
/// Inverse of the role-letter notation: "abd" -> {1,2,4}. "" is ∅.
SubsetMask parse_roles(std::string_view letters);

/// L_0 for |S| = s ∈ {4,5}: minimize Σ_T q_T subject to
///   3·Σ_{T∋y} q_T <= Σ_T q_T   for each y ∈ S   (rows "elem:<y>")
///   q_T >= 1                    for each T ⊆ S   (rows "lb:<var>")
///   q_∅ <= 2                                     (row  "empty-cap")
/// with every q_T declared nonnegative.
lp::LinearProgram build_base(int s);

/// {T ⊆ S : (a ∈ T and T ∩ C = ∅) or |T ∩ C| >= 2}, ascending by mask.
std::vector<SubsetMask> smallway_targets(int s, ElementId a, SubsetMask covered);

/// Raises the "lb:" row of each target to q_T >= 2.
lp::LinearProgram add_smallway(lp::LinearProgram program, const std::vector<SubsetMask>& targets);

/// 2^s - 2^{s-1-|C|} - |C|; requires |C| <= s - 1.
long largeway_constant(int s, int covered_count);
/// 3·Σ_{c∈C} q_{c} + 3·largeway_constant <= Σ_T q_T, stored as
/// Σ_T q_T - 3·Σ_{c∈C} q_{c} >= 3·largeway_constant.
lp::LinearConstraint largeway_constraint(int s, SubsetMask covered);

/// Right-hand sides K_j of Σ_{T∋b, |T|>=j} q_T >= K_j for j = 2, 3, 4.
std::array<long, 3> middleway_rhs(int s);
std::array<lp::LinearConstraint, 3> middleway_constraints(int s, ElementId b);

/// 28 - 3: the constant of the auxiliary bc bound for s = 5.
inline constexpr long kAuxBcConstant = 25;
/// 3·(q_{b} + q_{c} + q_{bc}) + 75 <= Σ_T q_T, for s = 5 only.
lp::LinearConstraint aux_bc_constraint(int s);

/// The program attached to one case:
///   Base:    L_0
///   C0:      smallway targets for C = ∅
///   C1:      smallway targets + the three middleway rows
///   C2:      smallway targets + largeway
///   C3Plus:  largeway only
///   AuxBC:   the auxiliary bc row (s = 5)
lp::LinearProgram build_case(const CaseSpec& spec);
CaseResult solve_case(const CaseSpec& spec);

/// L_0 with its objective replaced (always minimized).
lp::LpOutcome min_objective(int s, const lp::Coefficients& objective);

/// Rows s = 4, 5; columns |C| = 0, 1, 2, 3+.
struct Figure1 {
  std::array<std::array<CaseResult, 4>, 2> cells;

  [[nodiscard]] const CaseResult& at(int s, int column) const { return cells.at(s - 4).at(column); }
};

/// Solves the eight cells, using up to `jobs` threads; results are placed in
/// grid order regardless of completion order.
Figure1 figure1(int jobs = 1);

/// Header "s,0,1,2,3+" then one line per row.
std::string figure1_csv(const Figure1& table);
nlohmann::json figure1_json(const Figure1& table, bool certificates);

/// Outcome as JSON: status, bound, and optionally the certificate.
nlohmann::json outcome_json(const lp::LinearProgram& program, const lp::LpOutcome& outcome, bool certificate);

}  // namespace ucf::model
