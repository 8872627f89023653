#include "ucf/lp_text.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace ucf::lp {

namespace {

std::string bound_text(const std::optional<BigRational>& b, const char* infinite) {
  return b ? b->str() : std::string(infinite);
}

std::optional<BigRational> parse_bound(const std::string& tok, const char* infinite) {
  if (tok == infinite) return std::nullopt;
  return BigRational::parse(tok);
}

void write_terms(std::ostream& os, const Coefficients& coefficients) {
  for (const auto& [name, coef] : coefficients) os << ' ' << coef << ' ' << name;
}

Coefficients read_terms(const std::vector<std::string>& words, std::size_t first, std::size_t last) {
  if ((last - first) % 2 != 0) throw std::invalid_argument("coefficient list must alternate value and name");
  Coefficients out;
  for (std::size_t k = first; k < last; k += 2) out[words[k + 1]] += BigRational::parse(words[k]);
  return out;
}

Relation parse_relation(const std::string& tok) {
  if (tok == "<=") return Relation::kLessEqual;
  if (tok == ">=") return Relation::kGreaterEqual;
  if (tok == "=") return Relation::kEqual;
  throw std::invalid_argument("unknown relation '" + tok + "'");
}

}  // namespace

std::string format_program(const LinearProgram& lp) {
  std::ostringstream os;
  os << "ratlp 1\n";
  os << "sense " << (lp.sense() == Sense::kMinimize ? "minimize" : "maximize") << '\n';
  for (const auto& name : lp.variables()) {
    const auto& b = lp.bounds(name);
    os << "var " << name << ' ' << bound_text(b.lower, "-inf") << ' ' << bound_text(b.upper, "inf") << '\n';
  }
  os << "objective";
  write_terms(os, lp.objective());
  os << '\n';
  for (const auto& row : lp.constraints()) {
    os << "row " << row.label;
    write_terms(os, row.coefficients);
    os << ' ' << to_string(row.relation) << ' ' << row.rhs << '\n';
  }
  return os.str();
}

LinearProgram parse_program(std::string_view text) {
  LinearProgram lp;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  Sense sense = Sense::kMinimize;
  Coefficients objective;
  std::vector<LinearConstraint> rows;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> w;
    for (std::string tok; ls >> tok;) w.push_back(tok);
    if (w.empty() || w[0][0] == '#') continue;
    if (!header) {
      if (w.size() != 2 || w[0] != "ratlp" || w[1] != "1") throw std::invalid_argument("missing 'ratlp 1' header");
      header = true;
    } else if (w[0] == "sense" && w.size() == 2) {
      if (w[1] != "minimize" && w[1] != "maximize") throw std::invalid_argument("bad sense '" + w[1] + "'");
      sense = w[1] == "minimize" ? Sense::kMinimize : Sense::kMaximize;
    } else if (w[0] == "var" && w.size() == 4) {
      lp.add_variable(w[1], {parse_bound(w[2], "-inf"), parse_bound(w[3], "inf")});
    } else if (w[0] == "objective") {
      objective = read_terms(w, 1, w.size());
    } else if (w[0] == "row" && w.size() >= 6) {
      rows.push_back({w[1], read_terms(w, 2, w.size() - 2), parse_relation(w[w.size() - 2]),
                      BigRational::parse(w.back())});
    } else {
      throw std::invalid_argument("unrecognized line: " + line);
    }
  }
  if (!header) throw std::invalid_argument("missing 'ratlp 1' header");
  lp.set_objective(std::move(objective), sense);
  for (auto& row : rows) lp.add_constraint(std::move(row));
  return lp;
}

std::string format_outcome(const LpOutcome& outcome) {
  std::ostringstream os;
  if (const auto* opt = std::get_if<Optimal>(&outcome)) {
    os << "status optimal\nvalue " << opt->value << '\n';
    for (const auto& [name, v] : opt->assignment) os << "primal " << name << ' ' << v << '\n';
    for (std::size_t i = 0; i < opt->dual.size(); ++i) os << "dual " << i << ' ' << opt->dual[i] << '\n';
  } else if (const auto* inf = std::get_if<Infeasible>(&outcome)) {
    os << "status infeasible\n";
    for (std::size_t i = 0; i < inf->farkas.size(); ++i) os << "farkas " << i << ' ' << inf->farkas[i] << '\n';
  } else {
    const auto& unb = std::get<Unbounded>(outcome);
    os << "status unbounded\n";
    for (const auto& [name, v] : unb.point) os << "point " << name << ' ' << v << '\n';
    for (const auto& [name, v] : unb.ray) os << "ray " << name << ' ' << v << '\n';
  }
  return os.str();
}

}  // namespace ucf::lp
