#ifndef POWSGP_NUMSGP_HPP
#define POWSGP_NUMSGP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "powsgp/bitvec.hpp"

namespace powsgp {

/// A numerical semigroup: a cofinite subset of the non-negative integers
/// closed under addition, described by a finite set of generators with
/// gcd 1. With `includes_zero` it is the monoid variant (0 adjoined);
/// without, the plain semigroup of non-empty sums of generators. The two
/// variants have the same members above 0.
///
/// Membership is answered from a sieve covering [0, frobenius + 1]; every
/// larger integer is a member. Instances are immutable after construction
/// and safe to share across threads.
class NumericalSemigroup {
 public:
  using Ptr = std::shared_ptr<const NumericalSemigroup>;

  /// Builds the smallest subsemigroup of N containing `generators` (plus 0
  /// when `includes_zero`). The sieve is closed additively up to
  /// min(gens)*max(gens) + max(gens); the last gap below that bound is the
  /// Frobenius number, which is safe because the classical bound
  /// F <= (min-1)(max-1) - 1 holds for any coprime generating set.
  ///
  /// Throws input_error when `generators` is empty, contains a value < 1,
  /// or has gcd != 1 (the generated set would not be cofinite).
  static Ptr build(std::vector<std::int64_t> generators, bool includes_zero = true);

  /// The additive monoid of non-negative integers, <1> with 0.
  static const Ptr& naturals();

  const std::vector<std::int64_t>& generators() const { return gens_; }
  bool includes_zero() const { return includes_zero_; }

  /// Largest integer not in the set; -1 exactly when nothing is missing
  /// from N (the monoid <1>).
  std::int64_t frobenius() const { return frobenius_; }

  bool contains(std::int64_t n) const {
    if (n < 0) return false;
    if (n > frobenius_) return true;
    return sieve_.test(static_cast<std::size_t>(n));
  }

  /// Non-members of N up to the Frobenius number. The missing 0 of the
  /// no-zero variant is a convention rather than a gap and is reported only
  /// when `complement_in_n` is set.
  std::vector<std::int64_t> gaps(bool complement_in_n = false) const;

  /// Least non-zero member (the smallest generator).
  std::int64_t min_nonzero() const { return gens_.front(); }

  /// Least member >= n (n may be negative).
  std::int64_t next_member(std::int64_t n) const;

  /// All members in [0, n], ascending.
  std::vector<std::int64_t> members_upto(std::int64_t n) const;

  /// True when both structures denote the same subset of N.
  bool same_set(const NumericalSemigroup& other) const {
    return includes_zero_ == other.includes_zero_ && frobenius_ == other.frobenius_ &&
           sieve_ == other.sieve_;
  }

  /// Text form "<g1,g2,...;0>" (monoid) or "<g1,g2,...;no0>".
  std::string to_text() const;
  static Ptr parse_text(std::string_view text);

 private:
  NumericalSemigroup() = default;

  std::vector<std::int64_t> gens_;  // sorted, deduplicated
  bool includes_zero_ = true;
  std::int64_t frobenius_ = -1;
  BitVec sieve_;  // membership of [0, frobenius + 1]
};

}  // namespace powsgp

#endif  // POWSGP_NUMSGP_HPP
