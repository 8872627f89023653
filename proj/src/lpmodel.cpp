#include "ucf/lpmodel.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace ucf::model {

namespace {

using lp::Coefficients;
using lp::LinearConstraint;
using lp::LinearProgram;
using lp::Relation;

void require_s(int s) {
  if (s != 4 && s != 5) throw std::invalid_argument("|S| must be 4 or 5, got " + std::to_string(s));
}

void require_role(int s, ElementId role) {
  if (role < 1 || role > s) throw std::invalid_argument("role outside 1.." + std::to_string(s));
}

// Σ_T q_T with coefficient -1, the m side of every "<= m/3" row.
Coefficients minus_total(int s) {
  Coefficients c;
  for_each_subset(SubsetMask::ground(s), [&](SubsetMask t) { c[variable_name(t)] = -1; });
  return c;
}

std::string lower_bound_label(SubsetMask t) { return "lb:" + variable_name(t); }

}  // namespace

const char* to_string(Scenario scenario) {
  switch (scenario) {
    case Scenario::kBase: return "base";
    case Scenario::kC0: return "C0";
    case Scenario::kC1: return "C1";
    case Scenario::kC2: return "C2";
    case Scenario::kC3Plus: return "C3plus";
    case Scenario::kAuxBC: return "auxBC";
  }
  return "?";
}

CaseSpec CaseSpec::make(int s, Scenario scenario, std::optional<int> covered_count) {
  CaseSpec spec;
  spec.s = s;
  spec.scenario = scenario;
  spec.a = 1;
  int count = 0;
  switch (scenario) {
    case Scenario::kBase:
    case Scenario::kC0: count = 0; break;
    case Scenario::kC1: count = 1; break;
    case Scenario::kC2:
    case Scenario::kAuxBC: count = 2; break;
    case Scenario::kC3Plus: count = covered_count.value_or(3); break;
  }
  for (int k = 0; k < count; ++k) spec.covered = spec.covered.with(2 + k);
  spec.validate();
  return spec;
}

void CaseSpec::validate() const {
  require_s(s);
  require_role(s, a);
  if (!covered.subset_of(SubsetMask::ground(s))) throw std::invalid_argument("covered roles outside S");
  if (covered.contains(a)) throw std::invalid_argument("the flexible element cannot be covered");
  const int c = covered.size();
  bool ok = true;
  switch (scenario) {
    case Scenario::kBase:
    case Scenario::kC0: ok = c == 0; break;
    case Scenario::kC1: ok = c == 1; break;
    case Scenario::kC2: ok = c == 2; break;
    case Scenario::kC3Plus: ok = c == 3 || (s == 5 && c == 4); break;
    case Scenario::kAuxBC: ok = s == 5 && c == 2; break;
  }
  if (!ok) {
    throw std::invalid_argument(std::string("scenario ") + to_string(scenario) + " incompatible with s = " +
                                std::to_string(s) + ", |C| = " + std::to_string(c));
  }
}

std::optional<BigRational> CaseResult::bound() const {
  if (const auto* opt = std::get_if<lp::Optimal>(&outcome)) return opt->value;
  if (infeasible()) return std::nullopt;
  throw std::logic_error("case program is unbounded");
}

std::string CaseResult::bound_text() const {
  const auto b = bound();
  return b ? b->str() : "infeasible";
}

char role_letter(ElementId role) { return static_cast<char>('a' + role - 1); }

std::string variable_name(SubsetMask t) {
  std::string name = "q{";
  for (ElementId r : t.elements()) name += role_letter(r);
  return name + "}";
}

SubsetMask parse_roles(std::string_view letters) {
  SubsetMask t;
  for (char ch : letters) {
    if (ch < 'a' || ch > 'z') throw std::invalid_argument(std::string("bad role letter '") + ch + "'");
    t = t.with(ch - 'a' + 1);
  }
  return t;
}

LinearProgram build_base(int s) {
  require_s(s);
  LinearProgram program;
  const SubsetMask ground = SubsetMask::ground(s);
  for_each_subset(ground, [&](SubsetMask t) { program.add_variable(variable_name(t)); });

  Coefficients objective;
  for_each_subset(ground, [&](SubsetMask t) { objective[variable_name(t)] = 1; });
  program.set_objective(std::move(objective), lp::Sense::kMinimize);

  for (ElementId y = 1; y <= s; ++y) {
    Coefficients row = minus_total(s);
    for_each_subset(ground, [&](SubsetMask t) {
      if (t.contains(y)) row[variable_name(t)] += 3;
    });
    program.add_constraint({std::string("elem:") + role_letter(y), std::move(row), Relation::kLessEqual, 0});
  }
  for_each_subset(ground, [&](SubsetMask t) {
    program.add_constraint({lower_bound_label(t), {{variable_name(t), 1}}, Relation::kGreaterEqual, 1});
  });
  program.add_constraint({"empty-cap", {{variable_name(SubsetMask{}), 1}}, Relation::kLessEqual, 2});
  return program;
}

std::vector<SubsetMask> smallway_targets(int s, ElementId a, SubsetMask covered) {
  require_s(s);
  require_role(s, a);
  if (covered.contains(a)) throw std::invalid_argument("flexible element a cannot be covered");
  if (!covered.subset_of(SubsetMask::ground(s)) || covered.size() > s - 1) {
    throw std::invalid_argument("covered set must be a subset of S - a");
  }
  std::vector<SubsetMask> out;
  for_each_subset(SubsetMask::ground(s), [&](SubsetMask t) {
    const bool via_a = t.contains(a) && !t.intersects(covered);
    const bool via_pairs = (t & covered).size() >= 2;
    if (via_a || via_pairs) out.push_back(t);
  });
  return out;
}

LinearProgram add_smallway(LinearProgram program, const std::vector<SubsetMask>& targets) {
  for (SubsetMask t : targets) {
    const auto row = program.find_constraint(lower_bound_label(t));
    if (!row) throw std::invalid_argument("program has no lower-bound row for " + variable_name(t));
    if (program.constraints()[*row].rhs < 2) program.set_rhs(*row, 2);
  }
  return program;
}

long largeway_constant(int s, int covered_count) {
  if (covered_count < 0 || covered_count > s - 1) {
    throw std::invalid_argument("largeway needs 0 <= |C| <= s - 1");
  }
  return (1L << s) - (1L << (s - 1 - covered_count)) - covered_count;
}

LinearConstraint largeway_constraint(int s, SubsetMask covered) {
  require_s(s);
  if (!covered.subset_of(SubsetMask::ground(s))) throw std::invalid_argument("covered set outside S");
  const long constant = largeway_constant(s, covered.size());
  Coefficients row = minus_total(s);
  for (ElementId c : covered.elements()) row[variable_name(SubsetMask::singleton(c))] += 3;
  for (auto& [name, coef] : row) coef = -coef;
  return {"largeway", std::move(row), Relation::kGreaterEqual, 3 * constant};
}

std::array<long, 3> middleway_rhs(int s) {
  require_s(s);
  const std::array<long, 3> extra = {1L << (s - 2), (1L << (s - 2)) - 1, (1L << (s - 3)) - 1};
  std::array<long, 3> out{};
  for (int j = 2; j <= 4; ++j) {
    long with_b = 0;
    for_each_subset(SubsetMask::ground(s), [&](SubsetMask t) {
      if (t.contains(2) && t.size() >= j) ++with_b;
    });
    out[static_cast<std::size_t>(j - 2)] = with_b + extra[static_cast<std::size_t>(j - 2)];
  }
  return out;
}

std::array<LinearConstraint, 3> middleway_constraints(int s, ElementId b) {
  require_role(s, b);
  const auto rhs = middleway_rhs(s);
  std::array<LinearConstraint, 3> out;
  for (int j = 2; j <= 4; ++j) {
    Coefficients row;
    for_each_subset(SubsetMask::ground(s), [&](SubsetMask t) {
      if (t.contains(b) && t.size() >= j) row[variable_name(t)] = 1;
    });
    const auto k = static_cast<std::size_t>(j - 2);
    out[k] = {"middleway:" + std::to_string(j), std::move(row), Relation::kGreaterEqual, rhs[k]};
  }
  return out;
}

LinearConstraint aux_bc_constraint(int s) {
  if (s != 5) throw std::invalid_argument("the auxiliary bc constraint is defined for s = 5 only");
  Coefficients row = minus_total(s);
  const SubsetMask b = SubsetMask::singleton(2);
  const SubsetMask c = SubsetMask::singleton(3);
  for (SubsetMask t : {b, c, b | c}) row[variable_name(t)] += 3;
  for (auto& [name, coef] : row) coef = -coef;
  return {"aux-bc", std::move(row), Relation::kGreaterEqual, 3 * kAuxBcConstant};
}

LinearProgram build_case(const CaseSpec& spec) {
  spec.validate();
  LinearProgram program = build_base(spec.s);
  switch (spec.scenario) {
    case Scenario::kBase: break;
    case Scenario::kC0:
      program = add_smallway(std::move(program), smallway_targets(spec.s, spec.a, {}));
      break;
    case Scenario::kC1: {
      const auto targets = smallway_targets(spec.s, spec.a, spec.covered);
      const std::size_t expected = spec.s == 4 ? 4 : 8;
      if (targets.size() != expected) {
        throw std::logic_error("C1 expects " + std::to_string(expected) + " smallway targets, got " +
                               std::to_string(targets.size()));
      }
      program = add_smallway(std::move(program), targets);
      const ElementId b = spec.covered.elements().front();
      for (auto& row : middleway_constraints(spec.s, b)) program.add_constraint(std::move(row));
      break;
    }
    case Scenario::kC2:
      program = add_smallway(std::move(program), smallway_targets(spec.s, spec.a, spec.covered));
      program.add_constraint(largeway_constraint(spec.s, spec.covered));
      break;
    case Scenario::kC3Plus:
      program.add_constraint(largeway_constraint(spec.s, spec.covered));
      break;
    case Scenario::kAuxBC:
      program.add_constraint(aux_bc_constraint(spec.s));
      break;
  }
  return program;
}

CaseResult solve_case(const CaseSpec& spec) {
  CaseResult result{spec, build_case(spec), {}};
  result.outcome = lp::solve(result.program);
  if (std::holds_alternative<lp::Unbounded>(result.outcome)) {
    throw std::logic_error("case programs are bounded below by Σ q_T >= 0");
  }
  return result;
}

lp::LpOutcome min_objective(int s, const Coefficients& objective) {
  LinearProgram program = build_base(s);
  program.set_objective(objective, lp::Sense::kMinimize);
  return lp::solve(program);
}

Figure1 figure1(int jobs) {
  constexpr std::array<Scenario, 4> kColumns = {Scenario::kC0, Scenario::kC1, Scenario::kC2, Scenario::kC3Plus};
  std::vector<CaseSpec> specs;
  for (int s = 4; s <= 5; ++s) {
    for (Scenario sc : kColumns) specs.push_back(CaseSpec::make(s, sc));
  }
  Figure1 table;
  auto place = [&](std::size_t k, CaseResult r) { table.cells[k / 4][k % 4] = std::move(r); };
  const std::size_t batch = static_cast<std::size_t>(std::max(jobs, 1));
  for (std::size_t first = 0; first < specs.size(); first += batch) {
    const std::size_t last = std::min(specs.size(), first + batch);
    if (batch == 1) {
      place(first, solve_case(specs[first]));
      continue;
    }
    std::vector<std::future<CaseResult>> running;
    for (std::size_t k = first; k < last; ++k) running.push_back(std::async(std::launch::async, solve_case, specs[k]));
    for (std::size_t k = first; k < last; ++k) place(k, running[k - first].get());
  }
  return table;
}

std::string figure1_csv(const Figure1& table) {
  std::string out = "s,0,1,2,3+\n";
  for (int s = 4; s <= 5; ++s) {
    out += std::to_string(s);
    for (int col = 0; col < 4; ++col) out += "," + table.at(s, col).bound_text();
    out += "\n";
  }
  return out;
}

nlohmann::json outcome_json(const lp::LinearProgram& program, const lp::LpOutcome& outcome, bool certificate) {
  nlohmann::json j;
  auto rational_list = [](const std::vector<BigRational>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : v) arr.push_back(r.str());
    return arr;
  };
  auto assignment_obj = [](const lp::Assignment& a) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [name, v] : a) obj[name] = v.str();
    return obj;
  };
  auto labels = [&]() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : program.constraints()) arr.push_back(row.label);
    return arr;
  };
  if (const auto* opt = std::get_if<lp::Optimal>(&outcome)) {
    j["status"] = "optimal";
    j["bound"] = opt->value.str();
    if (certificate) {
      j["certificate"] = {{"rows", labels()}, {"primal", assignment_obj(opt->assignment)},
                          {"dual", rational_list(opt->dual)}};
    }
  } else if (const auto* inf = std::get_if<lp::Infeasible>(&outcome)) {
    j["status"] = "infeasible";
    j["bound"] = "infeasible";
    if (certificate) j["certificate"] = {{"rows", labels()}, {"farkas", rational_list(inf->farkas)}};
  } else {
    const auto& unb = std::get<lp::Unbounded>(outcome);
    j["status"] = "unbounded";
    if (certificate) j["certificate"] = {{"point", assignment_obj(unb.point)}, {"ray", assignment_obj(unb.ray)}};
  }
  j["verified"] = lp::verify_outcome(program, outcome);
  return j;
}

nlohmann::json figure1_json(const Figure1& table, bool certificates) {
  static const std::array<const char*, 4> kColumnNames = {"0", "1", "2", "3+"};
  nlohmann::json cells = nlohmann::json::array();
  for (int s = 4; s <= 5; ++s) {
    for (int col = 0; col < 4; ++col) {
      const CaseResult& r = table.at(s, col);
      nlohmann::json cell = outcome_json(r.program, r.outcome, certificates);
      cell["s"] = s;
      cell["covered"] = kColumnNames[static_cast<std::size_t>(col)];
      cells.push_back(std::move(cell));
    }
  }
  return {{"schema", 1}, {"cells", std::move(cells)}};
}

}  // namespace ucf::model
