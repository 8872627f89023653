#include "ucf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ucf/family_io.hpp"
#include "ucf/lp_text.hpp"
#include "ucf/lpmodel.hpp"
#include "ucf/search.hpp"
#include "ucf/setfam.hpp"

namespace ucf::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string out_path;
  bool approx = false;
  bool json = false;
  int jobs = 1;

  // table
  std::string table_format = "csv";
  bool certificates = false;

  // LP commands
  int s = 4;
  int covered = 0;
  bool aux_bc = false;
  bool dump_lp = false;
  std::string objective = "q_singleton";

  // family commands
  std::string file;
  std::string input_format = "auto";
  bool add_empty = false;
  bool normalize_first = false;
  std::string base;

  int n = 2;
};

std::string number(const BigRational& r, bool approx) {
  if (!approx) return r.str();
  std::ostringstream os;
  os << std::setprecision(12) << r.to_double();
  return os.str();
}

SubsetMask parse_base(const std::string& text) {
  std::string cleaned;
  for (char ch : text) cleaned += (ch == ',' || ch == '{' || ch == '}') ? ' ' : ch;
  std::istringstream in(cleaned);
  std::vector<ElementId> elems;
  for (std::string tok; in >> tok;) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || e < 1 || e > kMaxGroundSize) throw InputError("bad element '" + tok + "' in --base");
    elems.push_back(e);
  }
  return SubsetMask::of(elems);
}

SetFamily load(const Options& o) {
  FamilyFormat fmt = FamilyFormat::kAuto;
  if (o.input_format == "json") fmt = FamilyFormat::kJson;
  if (o.input_format == "text") fmt = FamilyFormat::kText;
  try {
    SetFamily f = load_family(o.file, fmt);
    if (o.add_empty) f = f.with(SubsetMask{});
    if (o.normalize_first) f = normalize(f);
    return f;
  } catch (const std::invalid_argument& e) {
    throw InputError(o.file + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

nlohmann::json mask_json(SubsetMask m) { return m.elements(); }

void print_outcome(std::ostream& out, const Options& o, const lp::LinearProgram& program,
                   const lp::LpOutcome& outcome) {
  if (o.dump_lp) out << lp::format_program(program) << lp::format_outcome(outcome);
  if (o.json) {
    out << model::outcome_json(program, outcome, o.certificates).dump(2) << '\n';
    return;
  }
  if (o.dump_lp) return;
  if (const auto* opt = std::get_if<lp::Optimal>(&outcome)) {
    out << number(opt->value, o.approx) << '\n';
  } else if (std::holds_alternative<lp::Infeasible>(outcome)) {
    out << "infeasible\n";
  } else {
    out << "unbounded\n";
  }
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto table = model::figure1(o.jobs);
  if (o.table_format == "json") {
    out << model::figure1_json(table, o.certificates).dump(2) << '\n';
    return kOk;
  }
  if (!o.approx) {
    out << model::figure1_csv(table);
    return kOk;
  }
  out << "s,0,1,2,3+\n";
  for (int s = 4; s <= 5; ++s) {
    out << s;
    for (int col = 0; col < 4; ++col) {
      const auto b = table.at(s, col).bound();
      out << ',' << (b ? number(*b, true) : "infeasible");
    }
    out << '\n';
  }
  return kOk;
}

int cmd_solve_case(const Options& o, std::ostream& out) {
  model::CaseSpec spec;
  try {
    if (o.aux_bc) {
      spec = model::CaseSpec::make(o.s, model::Scenario::kAuxBC);
    } else {
      switch (o.covered) {
        case 0: spec = model::CaseSpec::make(o.s, model::Scenario::kC0); break;
        case 1: spec = model::CaseSpec::make(o.s, model::Scenario::kC1); break;
        case 2: spec = model::CaseSpec::make(o.s, model::Scenario::kC2); break;
        default: spec = model::CaseSpec::make(o.s, model::Scenario::kC3Plus, o.covered); break;
      }
    }
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(e.what());
  }
  const auto result = model::solve_case(spec);
  print_outcome(out, o, result.program, result.outcome);
  return kOk;
}

int cmd_solve_base(const Options& o, std::ostream& out) {
  const auto result = model::solve_case(model::CaseSpec::make(o.s, model::Scenario::kBase));
  print_outcome(out, o, result.program, result.outcome);
  return kOk;
}

int cmd_min_objective(const Options& o, std::ostream& out) {
  lp::Coefficients objective;
  const SubsetMask ground = SubsetMask::ground(o.s);
  if (o.objective == "q_singleton") {
    objective[model::variable_name(SubsetMask::singleton(1))] = 1;
  } else if (o.objective == "sum_singletons") {
    for (ElementId y = 1; y <= o.s; ++y) objective[model::variable_name(SubsetMask::singleton(y))] = 1;
  } else {
    for_each_subset(ground, [&](SubsetMask t) { objective[model::variable_name(t)] = 1; });
  }
  lp::LinearProgram program = model::build_base(o.s);
  program.set_objective(objective, lp::Sense::kMinimize);
  print_outcome(out, o, program, lp::solve(program));
  return kOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const SetFamily f = load(o);
  const std::optional<SubsetMask> base = o.base.empty() ? std::nullopt : std::optional(parse_base(o.base));
  if (base && !base->subset_of(f.ground())) throw InputError("--base has elements outside 1..n");
  const auto freq = element_frequencies(f);
  std::optional<KthFrequency> f1;
  std::optional<KthFrequency> f2;
  if (!f.empty() && f.n() >= 1) f1 = kth_frequency(f, 1);
  if (!f.empty() && f.n() >= 2) f2 = kth_frequency(f, 2);
  const auto two_good = f.n() >= 1 ? minimal_two_good_sets(f) : std::vector<SubsetMask>{};

  if (o.json) {
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = f.n();
    j["m"] = f.size();
    j["union_closed"] = is_union_closed(f);
    j["frequencies"] = nlohmann::json::object();
    for (const auto& [x, c] : freq) j["frequencies"][std::to_string(x)] = c;
    auto kth = [&](const std::optional<KthFrequency>& k) {
      return k ? nlohmann::json{{"element", k->element}, {"count", k->count}, {"ratio", number(k->ratio, o.approx)}}
               : nlohmann::json(nullptr);
    };
    j["f_1"] = kth(f1);
    j["f_2"] = kth(f2);
    j["minimal_2_good_sets"] = nlohmann::json::array();
    for (SubsetMask s : two_good) {
      j["minimal_2_good_sets"].push_back({{"set", mask_json(s)}, {"incidence", incidence(f, s)}});
    }
    if (base) {
      nlohmann::json tc = nlohmann::json::array();
      for (const auto& [t, c] : trace_counts(f, *base).counts) tc.push_back({{"T", mask_json(t)}, {"q", c}});
      j["trace_counts"] = {{"base", mask_json(*base)}, {"counts", tc}};
    }
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "n: " << f.n() << '\n' << "m: " << f.size() << '\n';
  out << "union_closed: " << (is_union_closed(f) ? "true" : "false") << '\n';
  out << "frequencies:";
  for (const auto& [x, c] : freq) out << ' ' << x << ':' << c;
  out << '\n';
  auto kth_line = [&](const char* label, const std::optional<KthFrequency>& k) {
    if (!k) return;
    out << label << ": " << number(k->ratio, o.approx) << " (element " << k->element << ", " << k->count
        << " sets)\n";
  };
  kth_line("f_1", f1);
  kth_line("f_2", f2);
  out << "minimal_2_good_sets:\n";
  for (SubsetMask s : two_good) out << "  " << s.str() << " incidence " << incidence(f, s) << '\n';
  if (base) {
    out << "trace_counts " << base->str() << ":\n";
    for (const auto& [t, c] : trace_counts(f, *base).counts) out << "  " << t.str() << ' ' << c << '\n';
  }
  return kOk;
}

int cmd_covers(const Options& o, std::ostream& out) {
  const SetFamily f = load(o);
  if (f.contains(SubsetMask{})) throw InputError("the family contains the empty set, which no set covers");
  const SetFamily mc = minimal_covers(f);
  const bool antichain = is_antichain(f);
  const bool involution = minimal_covers(mc) == f.canonical();
  if (o.json) {
    nlohmann::json j{{"schema", 1}, {"minimal_covers", family_to_json(mc)}, {"input_is_antichain", antichain},
                     {"involution", involution}};
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "minimal_covers:\n";
  for (SubsetMask s : mc) out << "  " << s.str() << '\n';
  out << "input_is_antichain: " << (antichain ? "true" : "false") << '\n';
  out << "involution: " << (involution ? "true" : "false") << '\n';
  return kOk;
}

int report_exit(const search::VerificationReport& r) { return r.passed() ? kOk : kInternal; }

int cmd_search_nagel(const Options& o, std::ostream& out, std::ostream& err) {
  search::EnumerationSpec spec{o.n, false, true, std::nullopt};
  try {
    spec.validate();
    if (o.n < 2) throw std::invalid_argument("--n must be at least 2");
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError(e.what());
  }
  err << "enumerating union-closed families covering {1.." << o.n << "}\n";
  const auto report = search::verify_nagel_k2(spec, o.jobs);
  if (o.json) {
    out << report.to_json().dump(2) << '\n';
    return report_exit(report);
  }
  out << "families_checked: " << report.families_checked << '\n';
  out << "min_f2: " << (report.min_f2 ? number(*report.min_f2, o.approx) : "none") << '\n';
  out << "witness_count: " << report.witness_count << '\n';
  for (const auto& w : report.witnesses) out << "witness: " << format_family_json(w) << '\n';
  out << "violations: " << report.violations.size() << '\n';
  return report_exit(report);
}

int cmd_check_lemmas(const Options& o, std::ostream& out) {
  const SetFamily f = load(o);
  if (o.base.empty()) throw CLI::ValidationError("check-lemmas needs --base");
  const SubsetMask s = parse_base(o.base);
  if (!is_union_closed(f)) throw InputError("the family is not union-closed");
  search::VerificationReport report;
  try {
    report = search::spot_check_lemmas(f, s);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (o.json) {
    out << report.to_json().dump(2) << '\n';
    return report_exit(report);
  }
  out << "flexible_pairs: " << flexible_pairs(f, s).size() << '\n';
  for (const auto& [name, count] : report.checks) out << "check " << name << ": " << count << '\n';
  out << "violations: " << report.violations.size() << '\n';
  for (const auto& v : report.violations) out << "  " << v.message << '\n';
  return report_exit(report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact LP case analysis and set-family checks for the k = 2 frequency bound", "ucf"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out_path, "Write output to this file");
    sub->add_flag("--approx", o.approx, "Print decimals instead of exact rationals");
  };
  auto add_family_input = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Family file (.json or plain text)")->required();
    sub->add_option("--format", o.input_format, "Input format")->check(CLI::IsMember({"auto", "json", "text"}));
    sub->add_flag("--add-empty", o.add_empty, "Add the empty set before analysis");
    sub->add_flag("--json", o.json, "JSON output");
  };

  auto* table = app.add_subcommand("table", "Bounds for every case, s = 4, 5 by |C| = 0, 1, 2, 3+");
  table->add_option("--format", o.table_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  table->add_flag("--certificates", o.certificates, "Embed dual / Farkas certificates (json)");
  table->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_common(table);

  auto* solve_case = app.add_subcommand("solve-case", "Solve one case program");
  solve_case->add_option("--s", o.s, "|S|")->required()->check(CLI::IsMember({4, 5}));
  solve_case->add_option("--c", o.covered, "|C| (3 means 3+; 4 is the s = 5 variant)")->check(CLI::Range(0, 4));
  solve_case->add_flag("--aux-bc", o.aux_bc, "The auxiliary bc program (s = 5)");
  solve_case->add_flag("--dump-lp", o.dump_lp, "Print the program and certificate in ratlp text form");
  solve_case->add_flag("--json", o.json, "JSON output");
  solve_case->add_flag("--certificates", o.certificates, "Embed the certificate (json)");
  add_common(solve_case);

  auto* solve_base = app.add_subcommand("solve-base", "Solve the base program");
  solve_base->add_option("--s", o.s, "|S|")->required()->check(CLI::IsMember({4, 5}));
  solve_base->add_flag("--dump-lp", o.dump_lp, "Print the program and certificate in ratlp text form");
  solve_base->add_flag("--json", o.json, "JSON output");
  solve_base->add_flag("--certificates", o.certificates, "Embed the certificate (json)");
  add_common(solve_base);

  auto* min_obj = app.add_subcommand("min-objective", "Minimize a trace count over the base program");
  min_obj->add_option("--s", o.s, "|S|")->required()->check(CLI::IsMember({4, 5}));
  min_obj->add_option("--objective", o.objective, "q_singleton, sum_singletons or total")
      ->check(CLI::IsMember({"q_singleton", "sum_singletons", "total"}));
  min_obj->add_flag("--dump-lp", o.dump_lp, "Print the program and certificate in ratlp text form");
  min_obj->add_flag("--json", o.json, "JSON output");
  min_obj->add_flag("--certificates", o.certificates, "Embed the certificate (json)");
  add_common(min_obj);

  auto* analyze = app.add_subcommand("analyze", "Frequencies, minimal 2-good sets and trace counts of a family");
  add_family_input(analyze);
  analyze->add_option("--base", o.base, "Base set S for trace counts, e.g. 2,3,4");
  analyze->add_flag("--normalize", o.normalize_first, "Relabel so the most frequent element is 1");
  add_common(analyze);

  auto* covers = app.add_subcommand("covers", "Minimal covers MC(F) and the involution check");
  add_family_input(covers);
  add_common(covers);

  auto* nagel = app.add_subcommand("search-nagel", "Exhaustive f_2 >= 1/3 check over union-closed families");
  nagel->add_option("--n", o.n, "Ground set size (2..5)")->required();
  nagel->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  nagel->add_flag("--json", o.json, "JSON output");
  add_common(nagel);

  auto* lemmas = app.add_subcommand("check-lemmas", "Counting checks for the flexible-element lemmas");
  add_family_input(lemmas);
  lemmas->add_option("--base", o.base, "Minimal 2-good set S, e.g. 2,3,4")->required();
  add_common(lemmas);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ofstream file_out;
  std::ostream* sink = &out;
  if (!o.out_path.empty()) {
    file_out.open(o.out_path);
    if (!file_out) {
      err << "cannot write " << o.out_path << '\n';
      return kUsage;
    }
    sink = &file_out;
  }

  try {
    if (*table) return cmd_table(o, *sink);
    if (*solve_case) return cmd_solve_case(o, *sink);
    if (*solve_base) return cmd_solve_base(o, *sink);
    if (*min_obj) return cmd_min_objective(o, *sink);
    if (*analyze) return cmd_analyze(o, *sink);
    if (*covers) return cmd_covers(o, *sink);
    if (*nagel) return cmd_search_nagel(o, *sink, err);
    if (*lemmas) return cmd_check_lemmas(o, *sink);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const lp::CertificateError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace ucf::cli
