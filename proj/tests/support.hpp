#pragma once

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "ucf/ratlp.hpp"
#include "ucf/setfam.hpp"

namespace support {

inline std::vector<oracle::Mask> masks(const ucf::SetFamily& f) {
  std::vector<oracle::Mask> out;
  for (auto s : f) out.push_back(s.bits());
  std::sort(out.begin(), out.end());
  return out;
}

inline ucf::SetFamily family(int n, const std::vector<oracle::Mask>& ms) {
  std::vector<ucf::SubsetMask> sets;
  for (auto m : ms) sets.emplace_back(m);
  return {n, sets};
}

inline ucf::BigRational rat(const mpq_class& q) { return ucf::BigRational(q); }

/// Small random program with x >= 0: 1..4 variables, 1..8 rows, integer data.
/// Half of the programs get a nonnegative objective so optima are common.
inline oracle::Lp random_lp(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  oracle::Lp lp;
  const int n = pick(1, 4);
  const int m = pick(1, 8);
  const bool nonneg_obj = pick(0, 1) == 1;
  for (int j = 0; j < n; ++j) lp.c.emplace_back(nonneg_obj ? pick(0, 4) : pick(-3, 3));
  for (int i = 0; i < m; ++i) {
    std::vector<mpq_class> row;
    bool any = false;
    for (int j = 0; j < n; ++j) {
      row.emplace_back(pick(-3, 3));
      any = any || row.back() != 0;
    }
    if (!any) row[0] = 1;
    lp.a.push_back(row);
    const int r = pick(0, 9);
    lp.rel.push_back(r < 5 ? oracle::Rel::kLe : (r < 9 ? oracle::Rel::kGe : oracle::Rel::kEq));
    lp.b.emplace_back(pick(-4, 10));
  }
  return lp;
}

inline std::string var(std::size_t j) { return "x" + std::to_string(j); }

/// Same program; `order` permutes the rows (identity when empty).
inline ucf::lp::LinearProgram to_program(const oracle::Lp& o, const std::vector<std::size_t>& order = {}) {
  ucf::lp::LinearProgram lp;
  for (std::size_t j = 0; j < o.c.size(); ++j) lp.add_variable(var(j));
  ucf::lp::Coefficients obj;
  for (std::size_t j = 0; j < o.c.size(); ++j) obj[var(j)] = rat(o.c[j]);
  lp.set_objective(obj, ucf::lp::Sense::kMinimize);
  for (std::size_t k = 0; k < o.a.size(); ++k) {
    const std::size_t i = order.empty() ? k : order[k];
    ucf::lp::LinearConstraint row;
    row.label = "row" + std::to_string(i);
    for (std::size_t j = 0; j < o.c.size(); ++j) row.coefficients[var(j)] = rat(o.a[i][j]);
    row.relation = o.rel[i] == oracle::Rel::kLe   ? ucf::lp::Relation::kLessEqual
                   : o.rel[i] == oracle::Rel::kGe ? ucf::lp::Relation::kGreaterEqual
                                                  : ucf::lp::Relation::kEqual;
    row.rhs = rat(o.b[i]);
    lp.add_constraint(row);
  }
  return lp;
}

/// Outcome of `solve` agrees with the oracle answer (kind and optimum).
inline bool agrees(const ucf::lp::LpOutcome& got, const oracle::LpAnswer& want) {
  switch (want.kind) {
    case oracle::LpAnswer::kInfeasible: return std::holds_alternative<ucf::lp::Infeasible>(got);
    case oracle::LpAnswer::kUnbounded: return std::holds_alternative<ucf::lp::Unbounded>(got);
    case oracle::LpAnswer::kOptimal: {
      const auto* opt = std::get_if<ucf::lp::Optimal>(&got);
      return opt != nullptr && opt->value == rat(want.value);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Orbit-reduced trace-count programs, solved by oracle::solve_lp.
//
// Variables are orbit representatives u_k >= 1, shifted to v_k = u_k - 1 >= 0
// so that the oracle's x >= 0 convention carries the lower bounds.

inline long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Full symmetric group on S, |S| = s: classes by |T| = k. Objective weights
/// per class are given in terms of u (constant offsets folded back in).
struct Reduced {
  oracle::Lp lp;
  mpq_class offset;  // objective(u) = objective(v) + offset
};

/// 3·#{T ∋ y} ≤ m and q_∅ ≤ 2, with classes by |T|; `objective[k]` weights u_k.
inline Reduced reduced_symmetric(int s, const std::vector<mpq_class>& objective) {
  Reduced r;
  const int classes = s + 1;
  // elem row: Σ_k (3·C(s-1,k-1) - C(s,k)) u_k ≤ 0
  std::vector<mpq_class> row(classes);
  mpq_class shift = 0;
  for (int k = 0; k < classes; ++k) {
    row[k] = 3 * binom(s - 1, k - 1) - binom(s, k);
    shift += row[k];
  }
  r.lp.a.push_back(row);
  r.lp.rel.push_back(oracle::Rel::kLe);
  r.lp.b.emplace_back(-shift);
  std::vector<mpq_class> cap(classes, 0);
  cap[0] = 1;
  r.lp.a.push_back(cap);
  r.lp.rel.push_back(oracle::Rel::kLe);
  r.lp.b.emplace_back(1);
  r.offset = 0;
  for (int k = 0; k < classes; ++k) {
    r.lp.c.push_back(objective[k]);
    r.offset += objective[k];
  }
  return r;
}

/// Symmetry fixing one role a of S, |S| = s: classes (a ∈ T, k = |T - a|),
/// index e·s + k. `objective` is indexed the same way.
inline Reduced reduced_fix_one(int s, const std::vector<mpq_class>& objective) {
  Reduced r;
  const int rest = s - 1;
  const int classes = 2 * s;
  auto size = [&](int idx) { return binom(rest, idx % s); };
  auto has_a = [&](int idx) { return idx >= s; };
  auto k_of = [&](int idx) { return idx % s; };
  // Row for a, then row for a representative y ≠ a.
  std::vector<mpq_class> row_a(classes);
  std::vector<mpq_class> row_y(classes);
  for (int idx = 0; idx < classes; ++idx) {
    const mpq_class total = size(idx);
    row_a[idx] = 3 * (has_a(idx) ? total : mpq_class(0)) - total;
    row_y[idx] = 3 * binom(rest - 1, k_of(idx) - 1) - total;
  }
  for (const auto* row : {&row_a, &row_y}) {
    mpq_class shift = 0;
    for (const auto& v : *row) shift += v;
    r.lp.a.push_back(*row);
    r.lp.rel.push_back(oracle::Rel::kLe);
    r.lp.b.emplace_back(-shift);
  }
  std::vector<mpq_class> cap(classes, 0);
  cap[0] = 1;
  r.lp.a.push_back(cap);
  r.lp.rel.push_back(oracle::Rel::kLe);
  r.lp.b.emplace_back(1);
  r.offset = 0;
  for (int idx = 0; idx < classes; ++idx) {
    r.lp.c.push_back(objective[idx]);
    r.offset += objective[idx];
  }
  return r;
}

inline std::optional<mpq_class> solve_reduced(const Reduced& r) {
  const auto ans = oracle::solve_lp(r.lp);
  if (ans.kind != oracle::LpAnswer::kOptimal) return std::nullopt;
  return ans.value + r.offset;
}

}  // namespace support
