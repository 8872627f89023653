// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"
#include "ucf/lpmodel.hpp"
#include "ucf/ratlp.hpp"
#include "ucf/search.hpp"

using namespace ucf;
using model::CaseSpec;
using model::Scenario;

namespace {

/// Collects failed sub-checks of one criterion.
struct Check {
  std::ostringstream notes;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [" << what << "]";
    }
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream os;
      os << what << ": got " << got << ", want " << want;
      expect(false, os.str());
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double budget_seconds, const std::function<std::string(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  try {
    detail = body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_seconds) {
    std::ostringstream os;
    os << "over the " << budget_seconds << " s budget";
    c.expect(false, os.str());
  }
  if (!c.ok) ++failures;
  std::printf("%s  %d  %-40s %8.2f s  %s%s\n", c.ok ? "PASS" : "FAIL", id, name, secs, detail.c_str(),
              c.notes.str().c_str());
  std::fflush(stdout);
}

std::optional<BigRational> certified(Check& c, const model::CaseResult& r, const std::string& what) {
  c.expect(lp::verify_outcome(r.program, r.outcome), what + " certificate");
  return r.bound();
}

std::string names(const std::vector<SubsetMask>& ts) {
  std::vector<std::string> v;
  for (auto t : ts) v.push_back(model::variable_name(t).substr(1));
  std::sort(v.begin(), v.end());
  std::string out;
  for (const auto& s : v) out += s;
  return out;
}

std::string names(std::initializer_list<const char*> roles) {
  std::vector<SubsetMask> ts;
  for (const char* r : roles) ts.push_back(model::parse_roles(r));
  return names(ts);
}

}  // namespace

int main() {
  criterion(1, "case summary table", 10, [](Check& c) {
    const auto t = model::figure1();
    const char* want[2][4] = {{"81", "81", "114", "infeasible"}, {"237/2", "231/2", "122", "114"}};
    for (int s = 4; s <= 5; ++s) {
      for (int col = 0; col < 4; ++col) {
        const auto& cell = t.at(s, col);
        const std::string where = "s=" + std::to_string(s) + " col=" + std::to_string(col);
        certified(c, cell, where);
        c.equal(cell.bound_text(), std::string(want[s - 4][col]), where);
      }
    }
    std::string csv = model::figure1_csv(t);
    std::replace(csv.begin(), csv.end(), '\n', ' ');
    return csv;
  });

  criterion(2, "base bounds", 10, [](Check& c) {
    const auto r4 = model::solve_case(CaseSpec::make(4, Scenario::kBase));
    const auto r5 = model::solve_case(CaseSpec::make(5, Scenario::kBase));
    c.equal(*certified(c, r4, "s=4"), BigRational(45), "s=4");
    c.equal(*certified(c, r5, "s=5"), BigRational(141, 2), "s=5");
    lp::Assignment q;
    for_each_subset(SubsetMask::ground(4), [&](SubsetMask t) {
      q[model::variable_name(t)] = t.empty() ? 2 : (t.size() == 1 ? 8 : 1);
    });
    c.expect(lp::check_feasible(r4.program, q), "displayed solution feasible");
    c.equal(lp::objective_value(r4.program, q), BigRational(45), "displayed objective");
    const auto& opt = std::get<lp::Optimal>(r4.outcome);
    c.expect(lp::verify_optimality(r4.program, q, opt.dual), "displayed solution certified optimal");
    return "s=4: 45, s=5: 141/2, displayed point optimal";
  });

  criterion(3, "auxiliary bc program", 10, [](Check& c) {
    const auto r = model::solve_case(CaseSpec::make(5, Scenario::kAuxBC));
    const auto b = certified(c, r, "aux");
    c.expect(b && *b >= BigRational(129), "optimum >= 129");
    return "optimum " + r.bound_text();
  });

  criterion(4, "existence-lemma objectives", 60, [](Check& c) {
    std::string out;
    // Each q_{y}, s = 4, against the orbit model fixing one role.
    std::vector<mpq_class> w(8, 0);
    w[4] = 1;
    const auto oracle4 = support::solve_reduced(support::reduced_fix_one(4, w));
    c.expect(oracle4.has_value(), "reduced s=4 model solvable");
    for (ElementId y = 1; y <= 4; ++y) {
      const lp::Coefficients obj{{model::variable_name(SubsetMask::singleton(y)), 1}};
      auto program = model::build_base(4);
      program.set_objective(obj, lp::Sense::kMinimize);
      const auto outcome = model::min_objective(4, obj);
      c.expect(lp::verify_outcome(program, outcome), "q_y certificate");
      const auto* opt = std::get_if<lp::Optimal>(&outcome);
      c.expect(opt && opt->value >= BigRational(8), "q_y >= 8");
      if (opt && oracle4) c.equal(opt->value, support::rat(*oracle4), "q_y vs reduced oracle");
      if (opt && y == 1) out += "min q_y = " + opt->value.str();
    }
    lp::Coefficients singles;
    for (ElementId y = 1; y <= 5; ++y) singles[model::variable_name(SubsetMask::singleton(y))] = 1;
    auto program = model::build_base(5);
    program.set_objective(singles, lp::Sense::kMinimize);
    const auto outcome = model::min_objective(5, singles);
    c.expect(lp::verify_outcome(program, outcome), "sum certificate");
    const auto* opt = std::get_if<lp::Optimal>(&outcome);
    c.expect(opt && opt->value >= BigRational(40), "sum of singletons >= 40");
    const auto oracle5 = support::solve_reduced(support::reduced_symmetric(5, {0, 5, 0, 0, 0, 0}));
    if (opt && oracle5) c.equal(opt->value, support::rat(*oracle5), "sum vs reduced oracle");
    if (opt) out += ", min sum of singletons (s=5) = " + opt->value.str();
    return out;
  });

  criterion(5, "constraint-generator constants", 1, [](Check& c) {
    c.equal(model::largeway_constant(4, 2), 12L, "largeway s=4 |C|=2");
    c.equal(model::largeway_constant(4, 3), 12L, "largeway s=4 |C|=3");
    c.equal(model::largeway_constant(5, 2), 26L, "largeway s=5 |C|=2");
    c.equal(model::largeway_constant(5, 3), 27L, "largeway s=5 |C|=3");
    c.expect(model::middleway_rhs(4) == std::array<long, 3>{11, 7, 2}, "middleway s=4");
    c.expect(model::middleway_rhs(5) == std::array<long, 3>{23, 18, 8}, "middleway s=5");
    c.equal(names(model::smallway_targets(4, 1, model::parse_roles("b"))), names({"a", "ac", "ad", "acd"}),
            "smallway s=4 C=b");
    c.equal(names(model::smallway_targets(4, 1, model::parse_roles("bc"))),
            names({"a", "ad", "bc", "bcd", "abc", "abcd"}), "smallway s=4 C=bc");
    c.equal(names(model::smallway_targets(5, 1, model::parse_roles("bc"))),
            names({"a", "ad", "ae", "ade", "bc", "bcd", "bce", "bcde", "abc", "abcd", "abce", "abcde"}),
            "smallway s=5 C=bc");
    return "largeway 12,12,26,27; middleway 11,7,2 / 23,18,8; smallway lists";
  });

  criterion(6, "cover theorem", 300, [](Check& c) {
    const auto r = search::verify_cover_theorem(5, search::kDefaultCoverSamples);
    c.expect(r.passed(), std::to_string(r.violations.size()) + " violations");
    std::size_t antichains = 0;
    for (int n = 1; n <= 4; ++n) search::enumerate_antichains(n, [&](const SetFamily&) { ++antichains; });
    std::size_t want = 0;
    for (int n = 1; n <= 4; ++n) want += oracle::count_families(n).antichains;
    c.equal(antichains, want, "antichain count vs subfamily filter");
    c.expect(r.checks.count("mc-involution") && r.checks.at("mc-involution") >= antichains, "involution coverage");
    std::ostringstream os;
    os << r.families_checked << " families (" << antichains << " exhaustive antichains, "
       << search::kDefaultCoverSamples << " samples on n=5), 0 violations";
    return os.str();
  });

  criterion(7, "k=2 exhaustive check, n=2..4", 600, [](Check& c) {
    std::ostringstream os;
    for (int n = 2; n <= 4; ++n) {
      const auto r = search::verify_nagel_k2({n, false, true, std::nullopt});
      const auto want = oracle::count_families(n);
      const std::string at = "n=" + std::to_string(n);
      c.expect(r.passed(), at + " violations");
      c.equal(r.families_checked, want.covering_ground, at + " family count");
      c.expect(r.min_f2 == BigRational(1, 3), at + " min f_2");
      c.expect(r.min_f2 == support::rat(*want.min_f2), at + " min f_2 vs oracle");
      os << at << ": " << r.families_checked << " families, min f_2 " << (r.min_f2 ? r.min_f2->str() : "-") << "; ";
    }
    return os.str();
  });

  criterion(8, "lemma counting corpus", 300, [](Check& c) {
    const auto r = search::verify_lemma_corpus(1000, search::kDefaultSeed);
    c.equal(r.instances, std::size_t{1000}, "instances");
    c.expect(r.report.passed(), std::to_string(r.report.violations.size()) + " violations");
    for (const char* key : {"smallway-1", "smallway-2", "largeway", "middleway-2", "middleway-3", "middleway-4"}) {
      c.expect(r.report.checks.count(key) && r.report.checks.at(key) > 0, std::string(key) + " exercised");
    }
    std::ostringstream os;
    os << r.instances << " instances, " << r.sets_checked << " sets;";
    for (const auto& [k, v] : r.report.checks) os << ' ' << k << '=' << v;
    return os.str();
  });

  criterion(9, "LP oracle equivalence (500 programs)", 60, [](Check& c) {
    std::mt19937_64 rng(search::kDefaultSeed);
    int kinds[3] = {0, 0, 0};
    for (int trial = 0; trial < 500; ++trial) {
      const oracle::Lp o = support::random_lp(rng);
      const auto want = oracle::solve_lp(o);
      ++kinds[want.kind];
      const auto program = support::to_program(o);
      const auto got = lp::solve(program);
      const std::string at = "program " + std::to_string(trial);
      c.expect(support::agrees(got, want), at + " disagrees with vertex enumeration");
      c.expect(lp::verify_outcome(program, got), at + " certificate");
      std::vector<std::size_t> order(o.a.size());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      c.expect(support::agrees(lp::solve(support::to_program(o, order)), want), at + " row permutation");
    }
    std::ostringstream os;
    os << kinds[0] << " optimal, " << kinds[1] << " infeasible, " << kinds[2] << " unbounded";
    return os.str();
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
