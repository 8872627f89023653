#include "ucf/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <future>
#include <stdexcept>

#include "ucf/family_io.hpp"

namespace ucf::search {

namespace {

// Inclusive uniform draw; modulo bias is irrelevant at these ranges and the
// mapping is identical on every standard library.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); }

SetFamily family_of(int n, MaskView masks) {
  std::vector<SubsetMask> sets;
  sets.reserve(masks.size());
  for (std::uint64_t m : masks) sets.emplace_back(m);
  return SetFamily(n, std::move(sets));
}

// Depth-first enumeration with the family held as a bitset over the 2^n
// masks (2^n <= 32 fits one word).
class UnionClosedWalker {
 public:
  UnionClosedWalker(const EnumerationSpec& spec, const std::function<void(MaskView)>& visit)
      : spec_(spec), visit_(visit), full_(SubsetMask::ground(spec.n).bits()) {}

  void run_partition(std::uint64_t top) {
    members_.assign(1, top);
    present_ = std::uint64_t{1} << top;
    if (top == 0) {
      emit();
    } else {
      descend(static_cast<std::int64_t>(top) - 1);
    }
  }

 private:
  [[nodiscard]] bool has(std::uint64_t mask) const { return (present_ >> mask) & 1U; }

  [[nodiscard]] bool can_join(std::uint64_t x) const {
    return std::all_of(members_.begin(), members_.end(), [&](std::uint64_t y) { return has(x | y); });
  }

  void descend(std::int64_t next) {
    if (next < 0) {
      emit();
      return;
    }
    const auto x = static_cast<std::uint64_t>(next);
    const bool room = !spec_.max_family_size || members_.size() < *spec_.max_family_size;
    if (room && can_join(x)) {
      members_.push_back(x);
      present_ |= std::uint64_t{1} << x;
      descend(next - 1);
      present_ &= ~(std::uint64_t{1} << x);
      members_.pop_back();
    }
    descend(next - 1);
  }

  void emit() {
    if (spec_.require_empty && !has(0)) return;
    if (spec_.require_ground_coverage) {
      std::uint64_t support = 0;
      for (std::uint64_t m : members_) support |= m;
      if (support != full_) return;
    }
    visit_(MaskView(members_));
  }

  const EnumerationSpec& spec_;
  const std::function<void(MaskView)>& visit_;
  std::uint64_t full_;
  std::vector<std::uint64_t> members_;
  std::uint64_t present_ = 0;
};

// Exact f_2 = (second largest frequency) / m as an integer pair.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  friend bool operator<(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator==(const Ratio& a, const Ratio& b) { return a.num * b.den == b.num * a.den; }
};

Ratio second_frequency(int n, MaskView members) {
  std::array<std::uint64_t, kMaxEnumerationGround> freq{};
  for (std::uint64_t m : members) {
    for (int x = 0; x < n; ++x) freq[static_cast<std::size_t>(x)] += (m >> x) & 1U;
  }
  std::sort(freq.begin(), freq.begin() + n, std::greater<>());
  return {freq[1], members.size()};
}

VerificationReport nagel_partition(const EnumerationSpec& spec, std::uint64_t top) {
  VerificationReport report;
  std::optional<Ratio> best;
  enumerate_union_closed_partition(spec, top, [&](MaskView members) {
    ++report.families_checked;
    const Ratio f2 = second_frequency(spec.n, members);
    if (3 * f2.num < f2.den && report.violations.size() < kMaxRecordedViolations) {
      report.violations.push_back({family_of(spec.n, members), "f_2 below 1/3"});
    }
    if (!best || f2 < *best) {
      best = f2;
      report.witnesses.clear();
      report.witness_count = 0;
    }
    if (f2 == *best) {
      if (report.witnesses.size() < kMaxWitnesses) report.witnesses.push_back(family_of(spec.n, members));
      ++report.witness_count;
    }
  });
  if (best) report.min_f2 = BigRational(static_cast<long>(best->num)) / BigRational(static_cast<long>(best->den));
  report.checks["f2>=1/3"] = report.families_checked;
  return report;
}

void record(VerificationReport& report, const SetFamily& family, bool ok, const std::string& check,
            const std::string& detail) {
  ++report.checks[check];
  if (!ok && report.violations.size() < kMaxRecordedViolations) {
    report.violations.push_back({family, check + ": " + detail});
  }
}

void check_cover_identities(VerificationReport& report, const SetFamily& family, bool is_antichain_input) {
  ++report.families_checked;
  const SetFamily mc = minimal_covers(family);
  record(report, family, is_antichain(mc), "mc-antichain", "MC(F) is not an antichain");
  record(report, family, mc == minimal_covers(minimal_elements(family)), "mc-minimal-elements",
         "MC(F) != MC(minimal elements of F)");
  if (is_antichain_input) {
    // MC(F) of a nonempty antichain of nonempty sets never contains ∅.
    record(report, family, minimal_covers(mc) == family, "mc-involution", "MC(MC(F)) != F");
  }
}

std::size_t count_if_sets(const SetFamily& family, auto&& pred) {
  return static_cast<std::size_t>(std::count_if(family.begin(), family.end(), pred));
}

}  // namespace

void EnumerationSpec::validate() const {
  if (n < 1 || n > kMaxEnumerationGround) {
    throw std::invalid_argument("exhaustive enumeration supports 1 <= n <= " +
                                std::to_string(kMaxEnumerationGround) + ", got n = " + std::to_string(n));
  }
}

void enumerate_union_closed_partition(const EnumerationSpec& spec, std::uint64_t top,
                                      const std::function<void(MaskView)>& visit) {
  spec.validate();
  if (top > SubsetMask::ground(spec.n).bits()) throw std::invalid_argument("partition key outside 2^[n]");
  if (spec.max_family_size && *spec.max_family_size == 0) return;
  UnionClosedWalker(spec, visit).run_partition(top);
}

void enumerate_union_closed(const EnumerationSpec& spec, const std::function<void(MaskView)>& visit) {
  spec.validate();
  for (std::int64_t top = static_cast<std::int64_t>(SubsetMask::ground(spec.n).bits()); top >= 0; --top) {
    enumerate_union_closed_partition(spec, static_cast<std::uint64_t>(top), visit);
  }
}

void enumerate_union_closed(const EnumerationSpec& spec, const std::function<void(const SetFamily&)>& visit) {
  enumerate_union_closed(spec, std::function<void(MaskView)>([&](MaskView m) { visit(family_of(spec.n, m)); }));
}

std::vector<SetFamily> collect_union_closed(const EnumerationSpec& spec) {
  std::vector<SetFamily> out;
  enumerate_union_closed(spec, std::function<void(const SetFamily&)>([&](const SetFamily& f) { out.push_back(f); }));
  return out;
}

void enumerate_antichains(int n, const std::function<void(const SetFamily&)>& visit) {
  if (n < 1 || n > kMaxGroundSize) throw std::invalid_argument("bad ground size");
  if (n > 6) throw std::invalid_argument("antichain enumeration is limited to n <= 6");
  const std::uint64_t full = SubsetMask::ground(n).bits();
  std::vector<SubsetMask> chosen;
  std::function<void(std::uint64_t)> dfs = [&](std::uint64_t next) {
    if (next > full) {
      if (!chosen.empty()) visit(SetFamily(n, chosen));
      return;
    }
    const SubsetMask x(next);
    const bool comparable = std::any_of(chosen.begin(), chosen.end(),
                                        [x](SubsetMask y) { return y.subset_of(x) || x.subset_of(y); });
    if (!comparable) {
      chosen.push_back(x);
      dfs(next + 1);
      chosen.pop_back();
    }
    dfs(next + 1);
  };
  dfs(1);
}

void VerificationReport::merge(const VerificationReport& other) {
  families_checked += other.families_checked;
  if (other.min_f2 && (!min_f2 || *other.min_f2 < *min_f2)) {
    min_f2 = other.min_f2;
    witnesses = other.witnesses;
    witness_count = other.witness_count;
  } else if (other.min_f2 && min_f2 && *other.min_f2 == *min_f2) {
    for (const auto& w : other.witnesses) {
      if (witnesses.size() < kMaxWitnesses) witnesses.push_back(w);
    }
    witness_count += other.witness_count;
  }
  for (const auto& v : other.violations) {
    if (violations.size() < kMaxRecordedViolations) violations.push_back(v);
  }
  for (const auto& [name, count] : other.checks) checks[name] += count;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["families_checked"] = families_checked;
  j["min_f2"] = min_f2 ? nlohmann::json(min_f2->str()) : nlohmann::json(nullptr);
  j["witness_count"] = witness_count;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : witnesses) j["witnesses"].push_back(family_to_json(w));
  j["violations"] = nlohmann::json::array();
  for (const auto& v : violations) j["violations"].push_back({{"family", family_to_json(v.family)}, {"message", v.message}});
  j["checks"] = checks;
  j["passed"] = passed();
  return j;
}

VerificationReport verify_nagel_k2(const EnumerationSpec& spec, int jobs) {
  spec.validate();
  if (!spec.require_ground_coverage || spec.n < 2) {
    throw std::invalid_argument("the k = 2 check needs ground coverage with n >= 2");
  }
  std::vector<std::uint64_t> tops;
  for (std::int64_t t = static_cast<std::int64_t>(SubsetMask::ground(spec.n).bits()); t >= 0; --t) {
    tops.push_back(static_cast<std::uint64_t>(t));
  }
  std::vector<VerificationReport> parts(tops.size());
  const std::size_t workers = static_cast<std::size_t>(std::max(jobs, 1));
  if (workers == 1) {
    for (std::size_t k = 0; k < tops.size(); ++k) parts[k] = nagel_partition(spec, tops[k]);
  } else {
    // Strided assignment; each worker writes only its own slots.
    std::vector<std::future<void>> running;
    for (std::size_t w = 0; w < workers; ++w) {
      running.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t k = w; k < tops.size(); k += workers) parts[k] = nagel_partition(spec, tops[k]);
      }));
    }
    for (auto& r : running) r.get();
  }
  VerificationReport report;
  for (const auto& p : parts) report.merge(p);
  return report;
}

VerificationReport verify_cover_theorem(int n_max, std::size_t samples, std::uint64_t seed) {
  if (n_max < 1 || n_max > kMaxExhaustiveAntichainGround + 1) {
    throw std::invalid_argument("cover theorem check supports 1 <= n_max <= 5");
  }
  VerificationReport report;
  for (int n = 1; n <= std::min(n_max, kMaxExhaustiveAntichainGround); ++n) {
    enumerate_antichains(n, [&](const SetFamily& f) { check_cover_identities(report, f, true); });
    // Arbitrary families without ∅: every subset of the 2^n - 1 nonempty masks.
    const std::uint64_t nonempty = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << nonempty); ++pick) {
      std::vector<SubsetMask> sets;
      for (std::uint64_t rest = pick; rest != 0; rest &= rest - 1) {
        sets.emplace_back(static_cast<std::uint64_t>(std::countr_zero(rest)) + 1);
      }
      const SetFamily f(n, std::move(sets));
      if (!is_antichain(f)) check_cover_identities(report, f, false);
    }
  }
  if (n_max > kMaxExhaustiveAntichainGround) {
    constexpr int n = kMaxExhaustiveAntichainGround + 1;
    const std::uint64_t nonempty = (std::uint64_t{1} << n) - 1;
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
      const std::uint64_t count = draw(rng, 1, 12);
      std::vector<SubsetMask> sets;
      for (std::uint64_t i = 0; i < count; ++i) {
        const SubsetMask m(draw(rng, 1, nonempty));
        if (std::find(sets.begin(), sets.end(), m) == sets.end()) sets.push_back(m);
      }
      const SetFamily f(n, std::move(sets));
      const SetFamily g = minimal_elements(f);
      if (!is_antichain(f)) check_cover_identities(report, f, false);
      check_cover_identities(report, g, true);
    }
  }
  return report;
}

VerificationReport spot_check_lemmas(const SetFamily& family, SubsetMask s) {
  if (!is_union_closed(family)) throw std::invalid_argument("family is not union-closed");
  if (!s.subset_of(family.ground()) || !is_two_good(family, s)) {
    throw std::invalid_argument("S = " + s.str() + " is not 2-good");
  }
  for (ElementId y : s.elements()) {
    if (is_two_good(family, s.without(y))) throw std::invalid_argument("S = " + s.str() + " is not minimal");
  }

  VerificationReport report;
  report.families_checked = 1;
  const int size = s.size();
  const TraceCounts q = trace_counts(family, s);

  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (const auto& w : flexible_pairs(family, s)) pairs.emplace_back(w.a, w.x);
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  if (pairs.empty()) return report;

  std::size_t best_incidence = 0;
  for (SubsetMask t : minimal_two_good_sets(family)) {
    if (t.size() == size) best_incidence = std::max(best_incidence, incidence(family, t));
  }
  const bool incidence_maximal = incidence(family, s) >= best_incidence;

  for (const auto& [a, x] : pairs) {
    const std::string where = " (a=" + std::to_string(a) + ", x=" + std::to_string(x) + ")";
    const SubsetMask covered = covered_set(family, s, x);
    record(report, family, covered == covered_set_by_witnesses(family, s, x), "covered-dual",
           "the two covered-set characterizations differ" + where);
    record(report, family, !covered.contains(a), "flexible-not-covered", "a is covered" + where);

    for_each_subset(s, [&](SubsetMask t) {
      if (t.contains(a) && !t.intersects(covered)) {
        record(report, family, q.at(t) >= 2, "smallway-1", "q_T < 2 for T = " + t.str() + where);
      }
    });

    const auto c_elems = covered.elements();
    bool no_pair_good = true;
    for (std::size_t i = 0; i < c_elems.size(); ++i) {
      for (std::size_t j = i + 1; j < c_elems.size(); ++j) {
        if (is_two_good(family, s.with(x).without(c_elems[i]).without(c_elems[j]))) no_pair_good = false;
      }
    }
    if (c_elems.size() >= 2 && no_pair_good) {
      for_each_subset(s, [&](SubsetMask t) {
        if ((t & covered).size() >= 2) {
          record(report, family, q.at(t) >= 2, "smallway-2", "q_T < 2 for T = " + t.str() + where);
        }
      });
    }

    const long c_size = static_cast<long>(c_elems.size());
    long lower = (1L << size) - (1L << (size - 1 - c_size)) - c_size;
    for (ElementId c : c_elems) lower += static_cast<long>(q.at(SubsetMask::singleton(c)));
    const auto fx = static_cast<long>(frequency(family, x));
    record(report, family, fx >= lower, "largeway",
           "frequency(x) = " + std::to_string(fx) + " < " + std::to_string(lower) + where);

    if (incidence_maximal && c_elems.size() == 1) {
      const ElementId b = c_elems.front();
      record(report, family, frequency(family, b) >= frequency(family, x), "middleway-frequency",
             "frequency(b) < frequency(x)" + where);
      const std::array<std::size_t, 3> need = {
          std::size_t{1} << (size - 2), (std::size_t{1} << (size - 2)) - 1,
          size >= 3 ? (std::size_t{1} << (size - 3)) - 1 : 0};
      for (int j = 2; j <= 4; ++j) {
        const std::size_t have = count_if_sets(family, [&](SubsetMask A) {
          return A.contains(b) && !A.contains(x) && (A & s).size() >= j;
        });
        const std::size_t want = need[static_cast<std::size_t>(j - 2)];
        record(report, family, have >= want, "middleway-" + std::to_string(j),
               std::to_string(have) + " sets with b, without x, meeting S in >= " + std::to_string(j) +
                   " elements; need " + std::to_string(want) + where);
      }
    }
  }
  return report;
}

SetFamily random_union_closed(std::mt19937_64& rng, int n, int generators, bool with_empty) {
  if (n < 1 || n > kMaxGroundSize || generators < 1) throw std::invalid_argument("bad generator parameters");
  const std::uint64_t full = SubsetMask::ground(n).bits();
  std::vector<SubsetMask> gens;
  for (int k = 0; k < generators; ++k) {
    const SubsetMask g(draw(rng, 1, full));
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }
  SetFamily family = union_closure(SetFamily(n, std::move(gens)));
  if (with_empty) family = family.with(SubsetMask{});
  return normalize(family);
}

LemmaCorpusReport verify_lemma_corpus(std::size_t instances, std::uint64_t seed) {
  LemmaCorpusReport out;
  std::mt19937_64 rng(seed);
  while (out.instances < instances) {
    const int n = static_cast<int>(draw(rng, 4, 10));
    const int g = static_cast<int>(draw(rng, 3, 10));
    const bool with_empty = draw(rng, 0, 1) == 1;
    const SetFamily family = random_union_closed(rng, n, g, with_empty);
    ++out.families_drawn;
    bool qualifies = false;
    for (SubsetMask s : minimal_two_good_sets(family)) {
      if (s.size() < 2 || flexible_pairs(family, s).empty()) continue;
      qualifies = true;
      ++out.sets_checked;
      out.report.merge(spot_check_lemmas(family, s));
    }
    if (qualifies) ++out.instances;
  }
  return out;
}

}  // namespace ucf::search
