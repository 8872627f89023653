#pragma once

// Exact combinatorics of set families over small ground sets {1..n}.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ucf/rational.hpp"

namespace ucf {

/// Element of the ground set {1..n}. Element 1 is conventionally the most
/// frequent element of the family.
using ElementId = int;

/// Largest supported ground set; every subset fits in one 64-bit word.
inline constexpr int kMaxGroundSize = 63;

/// A subset of {1..n}; element i is bit (i - 1).
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}
  SubsetMask(std::initializer_list<ElementId> elements);

  static SubsetMask of(const std::vector<ElementId>& elements);
  /// {1..n}
  static constexpr SubsetMask ground(int n) {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr SubsetMask singleton(ElementId e) { return SubsetMask(std::uint64_t{1} << (e - 1)); }

  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
  [[nodiscard]] constexpr bool contains(ElementId e) const { return (bits_ >> (e - 1)) & 1U; }
  [[nodiscard]] constexpr bool subset_of(SubsetMask o) const { return (bits_ & ~o.bits_) == 0; }
  [[nodiscard]] constexpr bool proper_subset_of(SubsetMask o) const { return subset_of(o) && bits_ != o.bits_; }
  [[nodiscard]] constexpr bool intersects(SubsetMask o) const { return (bits_ & o.bits_) != 0; }
  /// Largest element, 0 for the empty set.
  [[nodiscard]] constexpr ElementId max_element() const { return 64 - std::countl_zero(bits_); }

  [[nodiscard]] constexpr SubsetMask with(ElementId e) const { return SubsetMask(bits_ | (std::uint64_t{1} << (e - 1))); }
  [[nodiscard]] constexpr SubsetMask without(ElementId e) const { return SubsetMask(bits_ & ~(std::uint64_t{1} << (e - 1))); }

  [[nodiscard]] std::vector<ElementId> elements() const;
  /// "{1,3}" / "{}"
  [[nodiscard]] std::string str() const;

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ | b.bits_); }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) { return SubsetMask(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(SubsetMask a, SubsetMask b) = default;
  friend constexpr auto operator<=>(SubsetMask a, SubsetMask b) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Calls fn(T) for every T ⊆ base, starting from ∅ and ascending in mask order.
template <class Fn>
void for_each_subset(SubsetMask base, Fn&& fn) {
  const std::uint64_t b = base.bits();
  std::uint64_t t = 0;
  while (true) {
    fn(SubsetMask(t));
    if (t == b) break;
    t = (t - b) & b;
  }
}

/// A finite collection of distinct subsets of {1..n}.
///
/// Member order is preserved as constructed; equality ignores order.
/// Union-closedness is not an invariant of the type (see is_union_closed).
class SetFamily {
 public:
  SetFamily() = default;
  /// Throws std::invalid_argument on duplicates, out-of-range elements, or
  /// n outside [0, kMaxGroundSize].
  SetFamily(int n, std::vector<SubsetMask> sets);
  static SetFamily from_lists(int n, const std::vector<std::vector<ElementId>>& sets);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::size_t size() const { return sets_.size(); }
  [[nodiscard]] bool empty() const { return sets_.empty(); }
  [[nodiscard]] const std::vector<SubsetMask>& sets() const { return sets_; }
  [[nodiscard]] SubsetMask ground() const { return SubsetMask::ground(n_); }
  [[nodiscard]] bool contains(SubsetMask s) const;
  /// Union of all members.
  [[nodiscard]] SubsetMask support() const;

  /// Same members sorted by ascending mask.
  [[nodiscard]] SetFamily canonical() const;
  /// Copy with s added (no-op if present).
  [[nodiscard]] SetFamily with(SubsetMask s) const;

  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  friend bool operator==(const SetFamily& a, const SetFamily& b);

 private:
  int n_ = 0;
  std::vector<SubsetMask> sets_;
  std::vector<SubsetMask> sorted_;
};

/// q_T = #{A ∈ F : A ∩ base = T} for every T ⊆ base.
struct TraceCounts {
  SubsetMask base;
  /// Every subset of base exactly once, ascending by mask.
  std::vector<std::pair<SubsetMask, std::size_t>> counts;

  [[nodiscard]] std::size_t at(SubsetMask t) const;
  [[nodiscard]] std::size_t total() const;
  /// Σ_T q_T·|T|
  [[nodiscard]] std::size_t weighted_total() const;
};

/// Witness that `a` is x-flexible: fa ∩ (S+x) = {a}, fa_prime ∩ (S+x) = {a,x}.
struct FlexibleWitness {
  ElementId a = 0;
  ElementId x = 0;
  SubsetMask fa;
  SubsetMask fa_prime;

  friend bool operator==(const FlexibleWitness&, const FlexibleWitness&) = default;
};

struct KthFrequency {
  ElementId element = 0;
  std::size_t count = 0;
  BigRational ratio;
};

bool is_union_closed(const SetFamily& family);

/// Smallest union-closed family containing every generator. Throws
/// std::invalid_argument for an empty generator collection.
SetFamily union_closure(const SetFamily& generators);

/// Number of members containing each element 1..n.
std::map<ElementId, std::size_t> element_frequencies(const SetFamily& family);
std::size_t frequency(const SetFamily& family, ElementId x);

/// k-th largest frequency, ties broken by smallest element id.
KthFrequency kth_frequency(const SetFamily& family, int k);

/// Relabels so the most frequent element (smallest id on ties) becomes 1.
SetFamily normalize(const SetFamily& family);

/// S avoids the distinguished element and meets every member other than ∅
/// and {distinguished}.
bool is_two_good(const SetFamily& family, SubsetMask s, ElementId distinguished = 1);

/// Inclusion-minimal 2-good sets, ascending by mask. Contains ∅ alone when
/// F ⊆ {∅, {distinguished}}.
std::vector<SubsetMask> minimal_two_good_sets(const SetFamily& family, ElementId distinguished = 1);

/// Σ_{A ∈ F} |A ∩ S|
std::size_t incidence(const SetFamily& family, SubsetMask s);

TraceCounts trace_counts(const SetFamily& family, SubsetMask s);

/// Elements y ∈ S covered by x, i.e. S + x - y is 2-good. Requires x ∉ S,
/// x ≠ distinguished, and S 2-good; throws std::invalid_argument otherwise.
SubsetMask covered_set(const SetFamily& family, SubsetMask s, ElementId x, ElementId distinguished = 1);

/// Same set via the witness characterization: y is covered iff every member
/// meeting S exactly in {y} contains x.
SubsetMask covered_set_by_witnesses(const SetFamily& family, SubsetMask s, ElementId x,
                                    ElementId distinguished = 1);

/// Every (a, x) with a ∈ S x-flexible, x ∉ S ∪ {distinguished}; witnesses are
/// the smallest masks. Sorted by (a, x). Requires S 2-good.
std::vector<FlexibleWitness> flexible_pairs(const SetFamily& family, SubsetMask s, ElementId distinguished = 1);

bool is_antichain(const SetFamily& family);

/// Members with no proper subset in the family, ascending by mask.
SetFamily minimal_elements(const SetFamily& family);

/// MC(F): the inclusion-minimal sets meeting every member, ascending by mask.
/// Throws std::invalid_argument when ∅ ∈ F.
SetFamily minimal_covers(const SetFamily& family);

}  // namespace ucf
