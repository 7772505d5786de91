#ifndef POWSGP_QUOTIENT_HPP
#define POWSGP_QUOTIENT_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "powsgp/pset.hpp"

namespace powsgp {

// Conjugacy by cancellative elements on P(H). The cancellative elements are
// exactly the singletons {x}, so X and Y are conjugate precisely when
// X - min X = Y - min Y; classes are represented by that normal form, a
// canonical subset of N containing 0.

/// X - min X over the naturals: the class representative of X.
PSet normalize(const PSet& x);

/// True iff X and Y are conjugate, i.e. X + u = Y + v for some members u, v.
bool conjugate_related(const PSet& x, const PSet& y);

/// A + k over S for A ⊆ N with 0 ∈ A and k above the Frobenius number of
/// S; inverse of normalize on classes: normalize(lift(A, S, k)) = A.
PSet lift(const PSet& a, const PSet::Ground& target, std::int64_t k);

/// Brute-force conjugacy witness for finite sets: the least (u, v) with
/// X + u = Y + v over members u, v <= F + max element + 1, if any. Used to
/// cross-check conjugate_related against the defining identity.
std::optional<std::pair<std::int64_t, std::int64_t>> conjugacy_witness(const PSet& x,
                                                                       const PSet& y);

}  // namespace powsgp

#endif  // POWSGP_QUOTIENT_HPP
