// Python bindings. Rationals cross the boundary as "p" / "p/q" strings; sets
// as sorted lists of ints; families as (n, list of sets).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ucf/family_io.hpp"
#include "ucf/lp_text.hpp"
#include "ucf/lpmodel.hpp"
#include "ucf/search.hpp"
#include "ucf/setfam.hpp"

namespace py = pybind11;
using namespace ucf;

namespace {

using Lists = std::vector<std::vector<ElementId>>;

SetFamily family(int n, const Lists& sets) { return SetFamily::from_lists(n, sets); }

Lists lists(const SetFamily& f) {
  Lists out;
  for (SubsetMask s : f.canonical()) out.push_back(s.elements());
  return out;
}

Lists lists(const std::vector<SubsetMask>& v) {
  Lists out;
  for (SubsetMask s : v) out.push_back(s.elements());
  return out;
}

py::object from_json(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict case_dict(const model::CaseResult& r) {
  py::dict d;
  d["status"] = r.infeasible() ? "infeasible" : "optimal";
  d["bound"] = r.bound() ? py::object(py::str(r.bound()->str())) : py::object(py::none());
  d["certified"] = lp::verify_outcome(r.program, r.outcome);
  d["program"] = lp::format_program(r.program);
  d["certificate"] = lp::format_outcome(r.outcome);
  return d;
}

model::CaseSpec case_spec(int s, std::optional<int> covered, bool aux_bc) {
  if (aux_bc) return model::CaseSpec::make(s, model::Scenario::kAuxBC);
  if (!covered) return model::CaseSpec::make(s, model::Scenario::kBase);
  switch (*covered) {
    case 0: return model::CaseSpec::make(s, model::Scenario::kC0);
    case 1: return model::CaseSpec::make(s, model::Scenario::kC1);
    case 2: return model::CaseSpec::make(s, model::Scenario::kC2);
    default: return model::CaseSpec::make(s, model::Scenario::kC3Plus, *covered);
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact LP case analysis and set-family checks (native core)";

  py::register_exception<lp::CertificateError>(m, "CertificateError", PyExc_RuntimeError);

  // Linear programs.
  m.def(
      "figure1",
      [](int jobs) {
        std::optional<model::Figure1> t;
        {
          py::gil_scoped_release release;
          t = model::figure1(jobs);
        }
        py::dict out;
        for (int s = 4; s <= 5; ++s)
          for (int col = 0; col < 4; ++col) out[py::make_tuple(s, col)] = case_dict(t->at(s, col));
        return out;
      },
      py::arg("jobs") = 1, "Every cell keyed by (s, column), columns |C| = 0, 1, 2, 3+.");
  m.def(
      "figure1_csv", [](int jobs) { return model::figure1_csv(model::figure1(jobs)); }, py::arg("jobs") = 1);
  m.def(
      "solve_case",
      [](int s, std::optional<int> covered, bool aux_bc) { return case_dict(model::solve_case(case_spec(s, covered, aux_bc))); },
      py::arg("s"), py::arg("covered") = py::none(), py::arg("aux_bc") = false,
      "covered=None solves the base program.");
  m.def(
      "min_objective",
      [](int s, const std::map<std::string, std::string>& objective) {
        lp::Coefficients c;
        for (const auto& [k, v] : objective) c[k] = BigRational::parse(v);
        lp::LinearProgram program = model::build_base(s);
        program.set_objective(c, lp::Sense::kMinimize);
        const auto outcome = lp::solve(program);
        const auto* opt = std::get_if<lp::Optimal>(&outcome);
        return opt ? py::object(py::str(opt->value.str())) : py::object(py::none());
      },
      py::arg("s"), py::arg("objective"));
  m.def(
      "solve_lp_text",
      [](const std::string& text) {
        const auto program = lp::parse_program(text);
        return lp::format_outcome(lp::solve(program));
      },
      py::arg("text"), "Solve a program in ratlp text form; returns the outcome in text form.");
  m.def("largeway_constant", &model::largeway_constant, py::arg("s"), py::arg("covered_count"));
  m.def("middleway_rhs", &model::middleway_rhs, py::arg("s"));
  m.def(
      "smallway_targets",
      [](int s, const std::string& covered_roles) {
        std::vector<std::string> out;
        for (SubsetMask t : model::smallway_targets(s, 1, model::parse_roles(covered_roles)))
          out.push_back(model::variable_name(t));
        return out;
      },
      py::arg("s"), py::arg("covered_roles"));

  // Set families.
  m.def(
      "union_closure", [](int n, const Lists& sets) { return lists(union_closure(family(n, sets))); }, py::arg("n"),
      py::arg("sets"));
  m.def(
      "is_union_closed", [](int n, const Lists& sets) { return is_union_closed(family(n, sets)); }, py::arg("n"),
      py::arg("sets"));
  m.def(
      "element_frequencies", [](int n, const Lists& sets) { return element_frequencies(family(n, sets)); },
      py::arg("n"), py::arg("sets"));
  m.def(
      "kth_frequency",
      [](int n, const Lists& sets, int k) {
        const auto r = kth_frequency(family(n, sets), k);
        return py::make_tuple(r.element, r.count, r.ratio.str());
      },
      py::arg("n"), py::arg("sets"), py::arg("k"));
  m.def(
      "minimal_two_good_sets", [](int n, const Lists& sets) { return lists(minimal_two_good_sets(family(n, sets))); },
      py::arg("n"), py::arg("sets"));
  m.def(
      "trace_counts",
      [](int n, const Lists& sets, const std::vector<ElementId>& base) {
        std::vector<std::pair<std::vector<ElementId>, std::size_t>> out;
        for (const auto& [t, c] : trace_counts(family(n, sets), SubsetMask::of(base)).counts)
          out.emplace_back(t.elements(), c);
        return out;
      },
      py::arg("n"), py::arg("sets"), py::arg("base"));
  m.def(
      "covered_set",
      [](int n, const Lists& sets, const std::vector<ElementId>& s, ElementId x) {
        return covered_set(family(n, sets), SubsetMask::of(s), x).elements();
      },
      py::arg("n"), py::arg("sets"), py::arg("s"), py::arg("x"));
  m.def(
      "flexible_pairs",
      [](int n, const Lists& sets, const std::vector<ElementId>& s) {
        std::vector<py::tuple> out;
        for (const auto& w : flexible_pairs(family(n, sets), SubsetMask::of(s)))
          out.push_back(py::make_tuple(w.a, w.x, w.fa.elements(), w.fa_prime.elements()));
        return out;
      },
      py::arg("n"), py::arg("sets"), py::arg("s"));
  m.def(
      "minimal_covers", [](int n, const Lists& sets) { return lists(minimal_covers(family(n, sets))); },
      py::arg("n"), py::arg("sets"));

  // Verification.
  m.def(
      "verify_nagel_k2",
      [](int n, int jobs) {
        nlohmann::json j;
        {
          py::gil_scoped_release release;
          j = search::verify_nagel_k2({n, false, true, std::nullopt}, jobs).to_json();
        }
        return from_json(j);
      },
      py::arg("n"), py::arg("jobs") = 1);
  m.def(
      "verify_cover_theorem",
      [](int n_max, std::size_t samples, std::uint64_t seed) {
        nlohmann::json j;
        {
          py::gil_scoped_release release;
          j = search::verify_cover_theorem(n_max, samples, seed).to_json();
        }
        return from_json(j);
      },
      py::arg("n_max"), py::arg("samples") = search::kDefaultCoverSamples, py::arg("seed") = search::kDefaultSeed);
  m.def(
      "spot_check_lemmas",
      [](int n, const Lists& sets, const std::vector<ElementId>& s) {
        return from_json(search::spot_check_lemmas(family(n, sets), SubsetMask::of(s)).to_json());
      },
      py::arg("n"), py::arg("sets"), py::arg("s"));
  m.def(
      "verify_lemma_corpus",
      [](std::size_t instances, std::uint64_t seed) {
        search::LemmaCorpusReport r;
        {
          py::gil_scoped_release release;
          r = search::verify_lemma_corpus(instances, seed);
        }
        auto j = r.report.to_json();
        j["instances"] = r.instances;
        j["families_drawn"] = r.families_drawn;
        j["sets_checked"] = r.sets_checked;
        return from_json(j);
      },
      py::arg("instances"), py::arg("seed") = search::kDefaultSeed);
}
