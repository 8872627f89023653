#include <optional>
#include <stdexcept>

#include "ucf/ratlp.hpp"

namespace ucf::lp {

namespace {

// Original variable x_j = offset + sign * column[pos] - column[neg].
struct VariableColumns {
  std::size_t pos = 0;
  std::optional<std::size_t> neg;
  mpq_class offset;
  int sign = 1;
};

// Dense tableau B^-1 [A | b] with the reduced-cost row kept alongside.
// objective_rhs holds minus the current objective value.
struct Tableau {
  std::vector<std::vector<mpq_class>> rows;
  std::vector<mpq_class> rhs;
  std::vector<std::size_t> basis;
  std::vector<mpq_class> reduced;
  mpq_class objective_rhs;

  [[nodiscard]] std::size_t columns() const { return reduced.size(); }

  void pivot(std::size_t r, std::size_t c) {
    const mpq_class piv = rows[r][c];
    for (auto& v : rows[r]) {
      if (sgn(v) != 0) v /= piv;
    }
    rhs[r] /= piv;
    auto eliminate = [&](std::vector<mpq_class>& target, mpq_class& target_rhs) {
      const mpq_class factor = target[c];
      if (sgn(factor) == 0) return;
      for (std::size_t j = 0; j < target.size(); ++j) {
        if (sgn(rows[r][j]) != 0) target[j] -= factor * rows[r][j];
      }
      target_rhs -= factor * rhs[r];
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r) eliminate(rows[i], rhs[i]);
    }
    eliminate(reduced, objective_rhs);
    basis[r] = c;
  }

  void load_costs(const std::vector<mpq_class>& costs) {
    reduced = costs;
    objective_rhs = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const mpq_class& cb = costs[basis[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < reduced.size(); ++j) reduced[j] -= cb * rows[i][j];
      objective_rhs -= cb * rhs[i];
    }
  }
};

enum class PhaseEnd { kOptimal, kUnbounded };

// Bland's rule: lowest-index improving column enters; among tied ratios the
// row whose basic column has the lowest index leaves.
PhaseEnd run_phase(Tableau& t, const std::vector<bool>& may_enter, std::size_t& blocking_column) {
  while (true) {
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j < t.columns(); ++j) {
      if (may_enter[j] && sgn(t.reduced[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (!enter) return PhaseEnd::kOptimal;
    std::optional<std::size_t> leave;
    mpq_class best_ratio;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      const mpq_class& a = t.rows[i][*enter];
      if (sgn(a) <= 0) continue;
      const mpq_class ratio = t.rhs[i] / a;
      if (!leave || ratio < best_ratio || (ratio == best_ratio && t.basis[i] < t.basis[*leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (!leave) {
      blocking_column = *enter;
      return PhaseEnd::kUnbounded;
    }
    t.pivot(*leave, *enter);
  }
}

struct StandardRow {
  std::vector<mpq_class> coef;
  mpq_class rhs;
  Relation relation = Relation::kLessEqual;
  std::optional<std::size_t> source;  // original constraint index; empty for bound rows
  int sign = 1;                       // -1 when the row was negated to make rhs >= 0
  std::size_t initial_column = 0;
};

class SimplexSolver {
 public:
  explicit SimplexSolver(const LinearProgram& lp) : lp_(lp) {}

  LpOutcome run() {
    build();
    const std::size_t m = rows_.size();
    if (artificial_count_ > 0) {
      std::vector<mpq_class> phase1(total_columns_);
      for (std::size_t j = first_artificial_; j < total_columns_; ++j) phase1[j] = 1;
      tableau_.load_costs(phase1);
      std::size_t unused = 0;
      run_phase(tableau_, std::vector<bool>(total_columns_, true), unused);
      if (sgn(tableau_.objective_rhs) < 0) return infeasible(phase1);
      drive_out_artificials();
    }
    std::vector<mpq_class> phase2(total_columns_);
    const bool maximize = lp_.sense() == Sense::kMaximize;
    for (const auto& [name, coef] : lp_.objective()) {
      const auto& vc = columns_[lp_.variable_index(name)];
      const mpq_class c = maximize ? mpq_class(-coef.raw()) : coef.raw();
      phase2[vc.pos] += c * vc.sign;
      if (vc.neg) phase2[*vc.neg] -= c;
    }
    tableau_.load_costs(phase2);
    std::vector<bool> may_enter(total_columns_, true);
    for (std::size_t j = first_artificial_; j < total_columns_; ++j) may_enter[j] = false;
    std::size_t blocking = 0;
    if (run_phase(tableau_, may_enter, blocking) == PhaseEnd::kUnbounded) return unbounded(blocking);

    Optimal opt;
    opt.assignment = current_point();
    opt.value = objective_value(lp_, opt.assignment);
    opt.dual.assign(lp_.constraints().size(), BigRational(0));
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = rows_[i];
      if (!row.source) continue;
      // Initial basic columns carry zero cost, so y_i = -reduced cost.
      mpq_class y = -tableau_.reduced[row.initial_column] * row.sign;
      if (maximize) y = -y;
      opt.dual[*row.source] = BigRational(y);
    }
    return opt;
  }

 private:
  void build() {
    const auto& vars = lp_.variables();
    columns_.resize(vars.size());
    std::size_t next = 0;
    std::vector<std::size_t> bounded_above;
    for (std::size_t j = 0; j < vars.size(); ++j) {
      const auto& b = lp_.bounds(j);
      auto& vc = columns_[j];
      vc.pos = next++;
      if (b.lower) {
        vc.offset = b.lower->raw();
        if (b.upper) bounded_above.push_back(j);
      } else if (b.upper) {
        vc.offset = b.upper->raw();
        vc.sign = -1;
      } else {
        vc.neg = next++;
      }
    }
    structural_columns_ = next;

    for (std::size_t i = 0; i < lp_.constraints().size(); ++i) {
      const auto& c = lp_.constraints()[i];
      StandardRow row;
      row.coef.assign(structural_columns_, 0);
      row.rhs = c.rhs.raw();
      row.relation = c.relation;
      row.source = i;
      for (const auto& [name, value] : c.coefficients) {
        const auto& vc = columns_[lp_.variable_index(name)];
        const mpq_class& a = value.raw();
        row.coef[vc.pos] += a * vc.sign;
        if (vc.neg) row.coef[*vc.neg] -= a;
        row.rhs -= a * vc.offset;
      }
      rows_.push_back(std::move(row));
    }
    for (std::size_t j : bounded_above) {
      StandardRow row;
      row.coef.assign(structural_columns_, 0);
      row.coef[columns_[j].pos] = 1;
      row.rhs = lp_.bounds(j).upper->raw() - lp_.bounds(j).lower->raw();
      rows_.push_back(std::move(row));
    }

    // Slack / surplus columns, then artificials for rows lacking a +1 slack.
    const std::size_t m = rows_.size();
    std::vector<std::optional<std::size_t>> slack(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (rows_[i].relation != Relation::kEqual) slack[i] = next++;
    }
    first_artificial_ = next;
    for (std::size_t i = 0; i < m; ++i) {
      auto& row = rows_[i];
      row.coef.resize(first_artificial_, 0);
      if (slack[i]) row.coef[*slack[i]] = row.relation == Relation::kLessEqual ? 1 : -1;
      if (sgn(row.rhs) < 0) {
        row.sign = -1;
        for (auto& v : row.coef) v = -v;
        row.rhs = -row.rhs;
      }
      if (slack[i] && sgn(row.coef[*slack[i]]) > 0) {
        row.initial_column = *slack[i];
      } else {
        row.initial_column = next++;
        ++artificial_count_;
      }
    }
    total_columns_ = next;

    tableau_.rows.resize(m);
    tableau_.rhs.resize(m);
    tableau_.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      auto& t = tableau_.rows[i];
      t = rows_[i].coef;
      t.resize(total_columns_, 0);
      if (rows_[i].initial_column >= first_artificial_) t[rows_[i].initial_column] = 1;
      tableau_.rhs[i] = rows_[i].rhs;
      tableau_.basis[i] = rows_[i].initial_column;
    }
    tableau_.reduced.assign(total_columns_, 0);
  }

  LpOutcome infeasible(const std::vector<mpq_class>& phase1_costs) {
    Infeasible out;
    out.farkas.assign(lp_.constraints().size(), BigRational(0));
    for (const auto& row : rows_) {
      if (!row.source) continue;
      const mpq_class y_std = phase1_costs[row.initial_column] - tableau_.reduced[row.initial_column];
      // Weight on the row in "<=" orientation.
      mpq_class w = -y_std * row.sign;
      if (row.relation == Relation::kGreaterEqual) w = -w;
      out.farkas[*row.source] = BigRational(w);
    }
    return out;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < tableau_.rows.size(); ++i) {
      if (tableau_.basis[i] < first_artificial_) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (sgn(tableau_.rows[i][j]) != 0) {
          tableau_.pivot(i, j);
          break;
        }
      }
      // Otherwise the row is redundant and its artificial stays basic at 0.
    }
  }

  std::vector<mpq_class> column_values() const {
    std::vector<mpq_class> values(total_columns_);
    for (std::size_t i = 0; i < tableau_.rows.size(); ++i) values[tableau_.basis[i]] = tableau_.rhs[i];
    return values;
  }

  Assignment map_back(const std::vector<mpq_class>& values, bool direction) const {
    Assignment out;
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      const auto& vc = columns_[j];
      mpq_class x = values[vc.pos] * vc.sign;
      if (vc.neg) x -= values[*vc.neg];
      if (!direction) x += vc.offset;
      out.emplace(lp_.variables()[j], BigRational(x));
    }
    return out;
  }

  Assignment current_point() const { return map_back(column_values(), false); }

  LpOutcome unbounded(std::size_t column) const {
    std::vector<mpq_class> direction(total_columns_);
    direction[column] = 1;
    for (std::size_t i = 0; i < tableau_.rows.size(); ++i) direction[tableau_.basis[i]] = -tableau_.rows[i][column];
    return Unbounded{current_point(), map_back(direction, true)};
  }

  const LinearProgram& lp_;
  std::vector<VariableColumns> columns_;
  std::vector<StandardRow> rows_;
  std::size_t structural_columns_ = 0;
  std::size_t first_artificial_ = 0;
  std::size_t total_columns_ = 0;
  std::size_t artificial_count_ = 0;
  Tableau tableau_;
};

}  // namespace

LpOutcome solve(const LinearProgram& lp) {
  LpOutcome outcome = SimplexSolver(lp).run();
  if (!verify_outcome(lp, outcome)) {
    throw CertificateError("simplex produced a certificate that does not verify");
  }
  return outcome;
}

}  // namespace ucf::lp
