#ifndef POWSGP_SUMSET_HPP
#define POWSGP_SUMSET_HPP

#include <cstdint>

#include "powsgp/pset.hpp"

namespace powsgp {

struct SumOptions {
  std::int64_t max_threshold = kDefaultMaxThreshold;
};

/// Exact sumset X + Y = {x + y : x in X, y in Y} as a canonical PSet.
/// Both operands must share the ground semigroup. Pure and thread-safe.
PSet add(const PSet& x, const PSet& y, const SumOptions& opts = {});

/// n-fold sumset A + ... + A, n >= 1, by a left fold of add.
PSet power(const PSet& a, std::int64_t n, const SumOptions& opts = {});

/// {x + t : x in X} over the `target` ground (t may be negative). Throws
/// input_error when any translated element leaves the target set.
PSet translate(const PSet& x, std::int64_t offset, const PSet::Ground& target,
               const SumOptions& opts = {});

/// Characteristic vector of X ∩ [0, window].
BitVec truncate(const PSet& x, std::int64_t window);

/// Exact membership of X on [0, limit), materialized.
BitVec dense_upto(const PSet& x, std::int64_t limit);

}  // namespace powsgp

#endif  // POWSGP_SUMSET_HPP
