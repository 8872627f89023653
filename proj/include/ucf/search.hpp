#pragma once

// Exhaustive and sampled verification over small set families.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ucf/setfam.hpp"

namespace ucf::search {

/// Largest ground set for exhaustive union-closed enumeration.
inline constexpr int kMaxEnumerationGround = 5;
/// Largest ground set for exhaustive antichain enumeration in the cover check.
inline constexpr int kMaxExhaustiveAntichainGround = 4;
inline constexpr std::size_t kDefaultCoverSamples = 100000;
inline constexpr std::uint64_t kDefaultSeed = 20240613;

struct EnumerationSpec {
  int n = 1;
  bool require_empty = false;
  /// Every element of 1..n lies in some member.
  bool require_ground_coverage = false;
  std::optional<std::size_t> max_family_size;

  /// Throws std::invalid_argument unless 1 <= n <= kMaxEnumerationGround.
  void validate() const;
};

/// Members of a family as raw masks, in descending mask order.
using MaskView = std::span<const std::uint64_t>;

/// Every nonempty union-closed family matching spec, each exactly once.
/// Depth-first over subsets in descending mask order: a subset may join only
/// if its union with every current member is already a member.
void enumerate_union_closed(const EnumerationSpec& spec, const std::function<void(MaskView)>& visit);
void enumerate_union_closed(const EnumerationSpec& spec, const std::function<void(const SetFamily&)>& visit);

/// The part of the enumeration whose largest member is `top`. The partitions
/// for top = 2^n - 1 down to 0 together yield the full enumeration, in order.
void enumerate_union_closed_partition(const EnumerationSpec& spec, std::uint64_t top,
                                      const std::function<void(MaskView)>& visit);

std::vector<SetFamily> collect_union_closed(const EnumerationSpec& spec);

/// Every nonempty antichain of nonempty subsets of {1..n}, ascending
/// depth-first over masks.
void enumerate_antichains(int n, const std::function<void(const SetFamily&)>& visit);

struct Violation {
  SetFamily family;
  std::string message;
};

struct VerificationReport {
  std::size_t families_checked = 0;
  std::optional<BigRational> min_f2;
  /// First few families attaining min_f2, in enumeration order.
  std::vector<SetFamily> witnesses;
  std::size_t witness_count = 0;
  std::vector<Violation> violations;
  /// How many times each kind of assertion was evaluated.
  std::map<std::string, std::size_t> checks;

  [[nodiscard]] bool passed() const { return violations.empty(); }
  /// Folds `other` in after this report's families.
  void merge(const VerificationReport& other);
  [[nodiscard]] nlohmann::json to_json() const;
};

inline constexpr std::size_t kMaxWitnesses = 8;
inline constexpr std::size_t kMaxRecordedViolations = 32;

/// Checks f_2(F) >= 1/3 over every family of the enumeration. Requires
/// require_ground_coverage and n >= 2. Partitions are spread over `jobs`
/// threads and merged in partition order.
VerificationReport verify_nagel_k2(const EnumerationSpec& spec, int jobs = 1);

/// For n <= min(n_max, 4): every nonempty antichain F of nonempty sets has
/// MC(F) an antichain and MC(MC(F)) = F, and every family F without ∅ has
/// MC(F) = MC(minimal_elements(F)). For n_max = 5 the same checks run on
/// `samples` random families (and their minimal elements) over {1..5}.
VerificationReport verify_cover_theorem(int n_max, std::size_t samples = kDefaultCoverSamples,
                                        std::uint64_t seed = kDefaultSeed);

/// Literal counting forms of the flexible-element lemmas for one minimal
/// 2-good set S of a union-closed family. Throws std::invalid_argument if F
/// is not union-closed or S is not a minimal 2-good set.
VerificationReport spot_check_lemmas(const SetFamily& family, SubsetMask s);

/// Union-closure of `generators` uniform nonempty subsets of {1..n}, with ∅
/// added when `with_empty`, then normalized so 1 is the most frequent element.
SetFamily random_union_closed(std::mt19937_64& rng, int n, int generators, bool with_empty);

struct LemmaCorpusReport {
  std::size_t instances = 0;
  std::size_t families_drawn = 0;
  std::size_t sets_checked = 0;
  VerificationReport report;
};

/// Draws families with n in [4, 10] and 3..10 generators until `instances`
/// of them have a minimal 2-good set of size >= 2 admitting a flexible pair,
/// then spot-checks every such set.
LemmaCorpusReport verify_lemma_corpus(std::size_t instances, std::uint64_t seed = kDefaultSeed);

}  // namespace ucf::search
