#include "ucf/setfam.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace ucf {

namespace {

void require_element(const SetFamily& family, ElementId e, const char* what) {
  if (e < 1 || e > family.n()) {
    throw std::invalid_argument(std::string(what) + " " + std::to_string(e) + " outside 1.." +
                                std::to_string(family.n()));
  }
}

void require_subset_of_ground(const SetFamily& family, SubsetMask s) {
  if (!s.subset_of(family.ground())) {
    throw std::invalid_argument("set " + s.str() + " not contained in ground set of size " +
                                std::to_string(family.n()));
  }
}

// Removes duplicates and every mask that has a proper subset in the list.
std::vector<std::uint64_t> keep_minimal(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint64_t> kept;
  for (std::uint64_t m : masks) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [m](std::uint64_t k) { return (k & ~m) == 0; });
    if (!dominated) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

// Minimal transversals of a hypergraph by Berge's incremental construction:
// the transversals of edges[0..i] are extended one edge at a time and
// re-minimized. Every edge must be nonempty.
std::vector<std::uint64_t> minimal_transversals(std::vector<std::uint64_t> edges) {
  edges = keep_minimal(std::move(edges));
  std::vector<std::uint64_t> transversals{0};
  for (std::uint64_t edge : edges) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t t : transversals) {
      if (t & edge) {
        next.push_back(t);
        continue;
      }
      for (std::uint64_t rest = edge; rest != 0; rest &= rest - 1) {
        next.push_back(t | (rest & (~rest + 1)));
      }
    }
    transversals = keep_minimal(std::move(next));
  }
  return transversals;
}

std::vector<SubsetMask> to_masks(const std::vector<std::uint64_t>& bits) {
  std::vector<SubsetMask> out;
  out.reserve(bits.size());
  for (std::uint64_t b : bits) out.emplace_back(b);
  return out;
}

// Smallest member with A ∩ window == target.
std::optional<SubsetMask> least_with_trace(const SetFamily& family, SubsetMask window, SubsetMask target) {
  std::optional<SubsetMask> best;
  for (SubsetMask a : family) {
    if ((a & window) == target && (!best || a < *best)) best = a;
  }
  return best;
}

}  // namespace

SubsetMask::SubsetMask(std::initializer_list<ElementId> elements) {
  for (ElementId e : elements) {
    if (e < 1 || e > kMaxGroundSize) throw std::invalid_argument("element out of range: " + std::to_string(e));
    bits_ |= std::uint64_t{1} << (e - 1);
  }
}

SubsetMask SubsetMask::of(const std::vector<ElementId>& elements) {
  SubsetMask m;
  for (ElementId e : elements) {
    if (e < 1 || e > kMaxGroundSize) throw std::invalid_argument("element out of range: " + std::to_string(e));
    m = m.with(e);
  }
  return m;
}

std::vector<ElementId> SubsetMask::elements() const {
  std::vector<ElementId> out;
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

std::string SubsetMask::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (ElementId e : elements()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

SetFamily::SetFamily(int n, std::vector<SubsetMask> sets) : n_(n), sets_(std::move(sets)) {
  if (n < 0 || n > kMaxGroundSize) {
    throw std::invalid_argument("ground set size " + std::to_string(n) + " outside 0.." +
                                std::to_string(kMaxGroundSize));
  }
  const SubsetMask g = ground();
  for (SubsetMask s : sets_) {
    if (!s.subset_of(g)) {
      throw std::invalid_argument("set " + s.str() + " has elements outside 1.." + std::to_string(n));
    }
  }
  sorted_ = sets_;
  std::sort(sorted_.begin(), sorted_.end());
  const auto dup = std::adjacent_find(sorted_.begin(), sorted_.end());
  if (dup != sorted_.end()) throw std::invalid_argument("duplicate set " + dup->str());
}

SetFamily SetFamily::from_lists(int n, const std::vector<std::vector<ElementId>>& sets) {
  std::vector<SubsetMask> masks;
  masks.reserve(sets.size());
  for (const auto& s : sets) {
    for (ElementId e : s) {
      if (e < 1 || e > n) {
        throw std::invalid_argument("element " + std::to_string(e) + " outside 1.." + std::to_string(n));
      }
    }
    masks.push_back(SubsetMask::of(s));
  }
  return SetFamily(n, std::move(masks));
}

bool SetFamily::contains(SubsetMask s) const { return std::binary_search(sorted_.begin(), sorted_.end(), s); }

SubsetMask SetFamily::support() const {
  SubsetMask u;
  for (SubsetMask s : sets_) u = u | s;
  return u;
}

SetFamily SetFamily::canonical() const { return SetFamily(n_, sorted_); }

SetFamily SetFamily::with(SubsetMask s) const {
  if (contains(s)) return *this;
  auto sets = sets_;
  sets.push_back(s);
  return SetFamily(n_, std::move(sets));
}

bool operator==(const SetFamily& a, const SetFamily& b) { return a.n_ == b.n_ && a.sorted_ == b.sorted_; }

std::size_t TraceCounts::at(SubsetMask t) const {
  const auto it = std::lower_bound(counts.begin(), counts.end(), t,
                                   [](const auto& entry, SubsetMask key) { return entry.first < key; });
  if (it == counts.end() || it->first != t) {
    throw std::invalid_argument(t.str() + " is not a subset of " + base.str());
  }
  return it->second;
}

std::size_t TraceCounts::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0},
                         [](std::size_t acc, const auto& e) { return acc + e.second; });
}

std::size_t TraceCounts::weighted_total() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0}, [](std::size_t acc, const auto& e) {
    return acc + e.second * static_cast<std::size_t>(e.first.size());
  });
}

bool is_union_closed(const SetFamily& family) {
  const auto& sets = family.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!family.contains(sets[i] | sets[j])) return false;
    }
  }
  return true;
}

SetFamily union_closure(const SetFamily& generators) {
  if (generators.empty()) throw std::invalid_argument("union_closure: empty generator collection");
  std::vector<std::uint64_t> members;
  std::unordered_set<std::uint64_t> seen;
  for (SubsetMask g : generators) {
    if (seen.insert(g.bits()).second) members.push_back(g.bits());
  }
  // Each new member is joined with every member present when it is reached,
  // and later members join with it in turn, so all pairs are covered.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const std::uint64_t u = members[i] | members[j];
      if (seen.insert(u).second) members.push_back(u);
    }
  }
  std::sort(members.begin(), members.end());
  return SetFamily(generators.n(), to_masks(members));
}

std::map<ElementId, std::size_t> element_frequencies(const SetFamily& family) {
  std::map<ElementId, std::size_t> freq;
  for (ElementId x = 1; x <= family.n(); ++x) freq[x] = 0;
  for (SubsetMask s : family) {
    for (ElementId x : s.elements()) ++freq[x];
  }
  return freq;
}

std::size_t frequency(const SetFamily& family, ElementId x) {
  require_element(family, x, "element");
  return static_cast<std::size_t>(
      std::count_if(family.begin(), family.end(), [x](SubsetMask s) { return s.contains(x); }));
}

KthFrequency kth_frequency(const SetFamily& family, int k) {
  if (k < 1 || k > family.n()) {
    throw std::invalid_argument("k = " + std::to_string(k) + " outside 1.." + std::to_string(family.n()));
  }
  if (family.empty()) throw std::invalid_argument("kth_frequency of an empty family");
  const auto freq = element_frequencies(family);
  std::vector<std::pair<ElementId, std::size_t>> ranked(freq.begin(), freq.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  const auto& [element, count] = ranked[static_cast<std::size_t>(k - 1)];
  return {element, count, BigRational(count) / BigRational(family.size())};
}

SetFamily normalize(const SetFamily& family) {
  if (family.n() == 0 || family.empty()) return family;
  const ElementId top = kth_frequency(family, 1).element;
  if (top == 1) return family;
  std::vector<SubsetMask> relabeled;
  relabeled.reserve(family.size());
  for (SubsetMask s : family) {
    SubsetMask r = s.without(1).without(top);
    if (s.contains(1)) r = r.with(top);
    if (s.contains(top)) r = r.with(1);
    relabeled.push_back(r);
  }
  return SetFamily(family.n(), std::move(relabeled));
}

bool is_two_good(const SetFamily& family, SubsetMask s, ElementId distinguished) {
  if (s.contains(distinguished)) return false;
  const SubsetMask excluded = SubsetMask::singleton(distinguished);
  return std::all_of(family.begin(), family.end(),
                     [&](SubsetMask a) { return a.empty() || a == excluded || a.intersects(s); });
}

std::vector<SubsetMask> minimal_two_good_sets(const SetFamily& family, ElementId distinguished) {
  require_element(family, distinguished, "distinguished element");
  // S is 2-good iff it is a transversal of {A - d : A ∉ {∅, {d}}} avoiding d;
  // those edges never contain d, so minimal transversals avoid it as well.
  std::vector<std::uint64_t> edges;
  for (SubsetMask a : family) {
    const SubsetMask rest = a.without(distinguished);
    if (!rest.empty()) edges.push_back(rest.bits());
  }
  return to_masks(minimal_transversals(std::move(edges)));
}

std::size_t incidence(const SetFamily& family, SubsetMask s) {
  std::size_t total = 0;
  for (SubsetMask a : family) total += static_cast<std::size_t>((a & s).size());
  return total;
}

TraceCounts trace_counts(const SetFamily& family, SubsetMask s) {
  require_subset_of_ground(family, s);
  TraceCounts tc{s, {}};
  for_each_subset(s, [&](SubsetMask t) { tc.counts.emplace_back(t, 0); });
  for (SubsetMask a : family) {
    const SubsetMask t = a & s;
    auto it = std::lower_bound(tc.counts.begin(), tc.counts.end(), t,
                               [](const auto& entry, SubsetMask key) { return entry.first < key; });
    ++it->second;
  }
  return tc;
}

namespace {

void require_cover_preconditions(const SetFamily& family, SubsetMask s, ElementId x, ElementId distinguished) {
  require_element(family, x, "element x");
  require_subset_of_ground(family, s);
  if (s.contains(x)) throw std::invalid_argument("x = " + std::to_string(x) + " lies in S");
  if (x == distinguished) throw std::invalid_argument("x must differ from the distinguished element");
  if (!is_two_good(family, s, distinguished)) throw std::invalid_argument("S = " + s.str() + " is not 2-good");
}

}  // namespace

SubsetMask covered_set(const SetFamily& family, SubsetMask s, ElementId x, ElementId distinguished) {
  require_cover_preconditions(family, s, x, distinguished);
  SubsetMask covered;
  for (ElementId y : s.elements()) {
    if (is_two_good(family, s.with(x).without(y), distinguished)) covered = covered.with(y);
  }
  return covered;
}

SubsetMask covered_set_by_witnesses(const SetFamily& family, SubsetMask s, ElementId x, ElementId distinguished) {
  require_cover_preconditions(family, s, x, distinguished);
  SubsetMask covered;
  for (ElementId y : s.elements()) {
    const SubsetMask target = SubsetMask::singleton(y);
    const bool all_contain_x = std::all_of(family.begin(), family.end(), [&](SubsetMask a) {
      return (a & s) != target || a.contains(x);
    });
    if (all_contain_x) covered = covered.with(y);
  }
  return covered;
}

std::vector<FlexibleWitness> flexible_pairs(const SetFamily& family, SubsetMask s, ElementId distinguished) {
  require_subset_of_ground(family, s);
  if (!is_two_good(family, s, distinguished)) throw std::invalid_argument("S = " + s.str() + " is not 2-good");
  std::vector<FlexibleWitness> out;
  for (ElementId a : s.elements()) {
    for (ElementId x = 1; x <= family.n(); ++x) {
      if (x == distinguished || s.contains(x)) continue;
      const SubsetMask window = s.with(x);
      const auto fa = least_with_trace(family, window, SubsetMask::singleton(a));
      if (!fa) continue;
      const auto fa_prime = least_with_trace(family, window, SubsetMask::singleton(a).with(x));
      if (fa_prime) out.push_back({a, x, *fa, *fa_prime});
    }
  }
  return out;
}

bool is_antichain(const SetFamily& family) {
  const auto& sets = family.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && sets[i].subset_of(sets[j])) return false;
    }
  }
  return true;
}

SetFamily minimal_elements(const SetFamily& family) {
  std::vector<SubsetMask> out;
  for (SubsetMask a : family) {
    const bool has_smaller =
        std::any_of(family.begin(), family.end(), [a](SubsetMask b) { return b.proper_subset_of(a); });
    if (!has_smaller) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return SetFamily(family.n(), std::move(out));
}

SetFamily minimal_covers(const SetFamily& family) {
  std::vector<std::uint64_t> edges;
  edges.reserve(family.size());
  for (SubsetMask a : family) {
    if (a.empty()) throw std::invalid_argument("family contains the empty set, which no set covers");
    edges.push_back(a.bits());
  }
  return SetFamily(family.n(), to_masks(minimal_transversals(std::move(edges))));
}

}  // namespace ucf
