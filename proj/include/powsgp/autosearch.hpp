#ifndef POWSGP_AUTOSEARCH_HPP
#define POWSGP_AUTOSEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powsgp/pset.hpp"

namespace powsgp {

enum class Variant {
  P0,  // subsets of H ∩ [0, N] containing 0
  P,   // subsets of H ∩ [0, N], with the empty set as overflow class
};

/// Finite stand-in for the power semigroup of H: subsets of H ∩ [0, N]
/// under the window-truncated sumset X ⊕ Y = (X + Y) ∩ [0, N].
///
/// Truncation is compatible with the operation — a sum <= N cannot use a
/// part > N — so "agrees on [0, N]" is a congruence on P(H) and ⊕ is
/// associative. For the P variant the congruence has one extra class, the
/// sets with minimum above N; it is represented by the empty set, which is
/// absorbing. The truncated structure is not a submonoid of P(H): window
/// artifacts such as the loss of cancellativity of non-zero singletons are
/// real and are surfaced by the queries below, never hidden.
struct BuildOptions {
  std::size_t element_cap = std::size_t{1} << 14;
};

class TruncatedPowerMonoid {
 public:
  static TruncatedPowerMonoid build(PSet::Ground ground, std::int64_t window, Variant variant,
                                    const BuildOptions& opts = {});

  std::size_t size() const { return count_; }
  Variant variant() const { return variant_; }
  std::int64_t window() const { return window_; }
  const PSet::Ground& ground() const { return ground_; }

  /// Members of H in [0, window], ascending.
  const std::vector<std::int64_t>& member_values() const { return members_; }

  /// X ⊕ Y by element index. The table is materialized up to 1024 elements
  /// and computed on demand past that.
  std::uint32_t op(std::uint32_t i, std::uint32_t j) const;

  std::vector<std::int64_t> element_values(std::uint32_t index) const;
  std::uint32_t index_of(const std::vector<std::int64_t>& values) const;
  bool element_contains(std::uint32_t index, std::int64_t value) const;
  std::size_t element_size(std::uint32_t index) const;
  /// Least element; empty for the overflow class of the P variant.
  std::optional<std::int64_t> element_min(std::uint32_t index) const;
  std::string element_to_string(std::uint32_t index) const;

  /// Index of {0} when the ground is a monoid (the identity of ⊕).
  std::optional<std::uint32_t> identity_index() const { return identity_; }

  bool is_idempotent_element(std::uint32_t index) const { return op(index, index) == index; }

 private:
  TruncatedPowerMonoid() = default;

  std::uint32_t mask_of(std::uint32_t index) const;
  std::uint32_t index_of_mask(std::uint32_t mask) const;
  std::uint32_t mask_op(std::uint32_t ma, std::uint32_t mb) const;

  PSet::Ground ground_;
  std::int64_t window_ = 0;
  Variant variant_ = Variant::P0;
  std::vector<std::int64_t> members_;       // H ∩ [0, window]
  std::vector<std::int32_t> position_;      // value -> index into members_, -1 otherwise
  std::size_t count_ = 0;
  std::optional<std::uint32_t> identity_;
  std::vector<std::uint32_t> table_;        // count x count when materialized
};

struct SearchOptions {
  double timeout_seconds = 60.0;  // <= 0 disables the deadline
};

struct AutomorphismSearchResult {
  std::vector<std::vector<std::uint32_t>> automorphisms;  // permutations as index arrays
  bool complete = true;                                   // false when the deadline cut the search
};

/// Every operation-preserving bijection of M, by backtracking over images
/// with partition-refinement pruning. Deterministic output, sorted
/// lexicographically; always contains the identity.
AutomorphismSearchResult find_automorphisms(const TruncatedPowerMonoid& m,
                                            const SearchOptions& opts = {});

/// Full O(n^2) homomorphism-and-bijection check, independent of the search
/// pruning.
bool is_homomorphism(const TruncatedPowerMonoid& m, const std::vector<std::uint32_t>& f);

/// First pair (i, j) with f(i ⊕ j) != f(i) ⊕ f(j), if any.
std::optional<std::pair<std::uint32_t, std::uint32_t>> homomorphism_failure(
    const TruncatedPowerMonoid& m, const std::vector<std::uint32_t>& f);

struct PipelineStep {
  std::string name;
  bool passed = false;
  std::size_t checked = 0;  // how many instances the step examined
  std::string witness;      // first failing instance, empty when passed
};

struct ProofPipelineReport {
  std::vector<PipelineStep> steps;

  bool all_passed() const {
    for (const PipelineStep& s : steps) {
      if (!s.passed) return false;
    }
    return true;
  }
};

/// Runs the automorphism-rigidity argument against a candidate bijection f
/// of M (given as an index permutation), one verdict per step: f is a
/// ⊕-homomorphism; fixes each in-window doubleton {0,x}; fixes each
/// idempotent; moves membership consistently through the truncated halo
/// equalities; preserves minima; and induces a well-defined map on
/// normalized classes. Each failing step reports its first witness.
ProofPipelineReport proof_pipeline(const TruncatedPowerMonoid& m,
                                   const std::vector<std::uint32_t>& f);

/// All elements whose left and right translation maps are injective on M.
/// Truncation destroys cancellativity of the non-zero singletons, so over a
/// monoid ground this is typically just {0}.
std::vector<std::uint32_t> find_cancellative(const TruncatedPowerMonoid& m);

}  // namespace powsgp

#endif  // POWSGP_AUTOSEARCH_HPP
