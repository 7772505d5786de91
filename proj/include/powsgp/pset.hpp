#ifndef POWSGP_PSET_HPP
#define POWSGP_PSET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "powsgp/bitvec.hpp"
#include "powsgp/numsgp.hpp"

namespace powsgp {

/// Largest supported tail threshold (and largest finite element).
inline constexpr std::int64_t kDefaultMaxThreshold = std::int64_t{1} << 20;

/// A non-empty subset of a numerical semigroup H that is either finite or
/// eventually full: head ∪ {h ∈ H : h >= threshold}. These are exactly the
/// sets this library computes with; infinite subsets of H that are not
/// eventually full (such as the even members) are not representable.
///
/// Values are canonical — a finite set is always Finite, and a tail
/// threshold is always minimal — so structural equality coincides with
/// equality of the denoted sets (over equal grounds).
///
/// Window bound used throughout the tests: two canonical sets over the same
/// ground that agree on [0, max(thresholds, head maxima) + F + 1] are
/// equal, where F is the Frobenius number. Past both thresholds membership
/// is decided by the ground alone, and a canonical threshold t > 0 is
/// witnessed by a missing member at some h in H with h < t, which the
/// window contains because H meets every interval of length F + 1.
///
/// PSet values are immutable and freely shareable between threads.
class PSet {
 public:
  using Ground = NumericalSemigroup::Ptr;

  /// Canonical set from explicit elements (must be non-empty members of H).
  static PSet finite(const Ground& ground, const std::vector<std::int64_t>& elems);

  /// Canonical set denoting head ∪ {h ∈ H : h >= tau}. Head entries >= tau
  /// are absorbed by the tail; tau shrinks to its minimal value.
  static PSet with_tail(const Ground& ground, const std::vector<std::int64_t>& head,
                        std::int64_t tau,
                        std::int64_t max_threshold = kDefaultMaxThreshold);

  /// Canonicalizing constructor from a characteristic vector. For a tail
  /// set, `bits` must give exact membership on [0, tau).
  static PSet from_bits(const Ground& ground, BitVec bits, std::optional<std::int64_t> tau,
                        std::int64_t max_threshold = kDefaultMaxThreshold);

  static PSet singleton(const Ground& ground, std::int64_t x);

  /// All of H.
  static PSet full(const Ground& ground);

  /// H ∩ Z>=k, the semiline above k inside H.
  static PSet semiline(const Ground& ground, std::int64_t k);

  bool is_finite() const { return !tau_.has_value(); }
  bool is_tail() const { return tau_.has_value(); }

  /// Minimal tail threshold; only meaningful for tail sets.
  std::int64_t threshold() const { return *tau_; }

  const BitVec& head_bits() const { return head_; }
  std::vector<std::int64_t> head_values() const { return head_.values(); }
  std::size_t head_count() const { return head_.count(); }
  const Ground& ground() const { return ground_; }

  bool member(std::int64_t n) const {
    if (n < 0) return false;
    if (tau_ && n >= *tau_) return ground_->contains(n);
    return head_.test(static_cast<std::size_t>(n));
  }

  /// Least element of the denoted set.
  std::int64_t min() const {
    std::size_t first = head_.find_first();
    if (first != BitVec::npos) return static_cast<std::int64_t>(first);
    return ground_->next_member(*tau_);
  }

  bool same_ground(const PSet& other) const {
    return ground_ == other.ground_ || ground_->same_set(*other.ground_);
  }

  bool operator==(const PSet& other) const {
    return tau_ == other.tau_ && head_ == other.head_ && same_ground(other);
  }
  bool operator!=(const PSet& other) const { return !(*this == other); }

  std::size_t hash() const {
    return head_.hash() * 1000003u + static_cast<std::size_t>(tau_ ? *tau_ + 1 : 0);
  }

  /// Literal form: finite "{0,2,3}", tail "{0,2,~7}" meaning
  /// {0,2} ∪ (H ∩ Z>=7).
  std::string to_literal() const;
  static PSet parse_literal(const Ground& ground, std::string_view text);

 private:
  PSet(Ground ground, BitVec head, std::optional<std::int64_t> tau)
      : ground_(std::move(ground)), head_(std::move(head)), tau_(tau) {}

  Ground ground_;
  BitVec head_;                       // characteristic bits; for tails, all < tau_
  std::optional<std::int64_t> tau_;   // empty = finite
};

struct PSetHash {
  std::size_t operator()(const PSet& x) const { return x.hash(); }
};

/// Finite set minus explicit elements (each must be present); the result
/// must stay non-empty. Used by the witness constructions.
PSet difference(const PSet& x, const std::vector<std::int64_t>& removed);

}  // namespace powsgp

#endif  // POWSGP_PSET_HPP
