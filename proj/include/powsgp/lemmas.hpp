#ifndef POWSGP_LEMMAS_HPP
#define POWSGP_LEMMAS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "powsgp/pset.hpp"
#include "powsgp/sumset.hpp"

namespace powsgp {

/// Output of a witness construction: the constructed sets together with the
/// per-witness verification verdicts.
struct WitnessReport {
  std::vector<PSet> witnesses;
  std::vector<bool> verified;
  std::int64_t bound_claimed = 0;
  std::int64_t distinct_count = 0;

  bool all_verified() const {
    for (bool v : verified) {
      if (!v) return false;
    }
    return true;
  }
};

struct EnumOptions {
  std::size_t max_domain = 24;  // candidate-domain cap for subset enumeration
};

/// True iff E + E = E.
bool is_idempotent(const PSet& e);

/// For an idempotent E containing 0 and a member y of H, evaluates the
/// absorption identity {0,y} + E = E. Agrees with member(E, y); the
/// identity turns element membership into an algebraic condition.
bool doubleton_absorb_test(const PSet& e, std::int64_t y);

/// The pair (H_y, H_y^*) with H_y = {0} ∪ (H ∩ Z>=y) and H_y^* = H_y \ {y},
/// for a non-zero member y of the monoid. Both are idempotents containing 0.
std::pair<PSet, PSet> halo_pair(const PSet::Ground& ground, std::int64_t y);

/// Membership test through the halo identity: y ∈ X iff
/// H_y + X = H_y^* + X, for X containing 0 and non-zero y in H.
bool member_by_halo(const PSet& x, std::int64_t y);

/// For finite A containing 0 and n >= 3, emits Q = A^(n-1) \ B for every
/// B ⊆ A \ {0} and verifies Q + A = A^n. The report carries exactly
/// 2^(|A|-1) pairwise distinct witnesses, showing X + A = A^n has at least
/// that many solutions.
WitnessReport lemma_q_witnesses(const PSet& a, std::int64_t n);

/// All finite X with X + A = B, for finite non-empty A, B. Every solution
/// is a subset of D = {d ∈ H : d + A ⊆ B}, so the search enumerates
/// subsets of D; |D| is capped by opts.max_domain.
std::vector<PSet> enumerate_translate_solutions(const PSet& a, const PSet& b,
                                                const EnumOptions& opts = {});

/// Independent cross-check of the enumerator: tries every non-empty subset
/// of H ∩ [0, max B] directly. Only for tiny instances (hard cap 20).
std::vector<PSet> enumerate_translate_solutions_wide(const PSet& a, const PSet& b);

/// For finite non-empty A, n >= 2 and an (n-1)-tuple of elements of A with
/// sum x, emits A^n together with X_a = A^n \ {a + x} for each
/// a ∈ A \ {tuple[0]}, and verifies A^n + X_a = A^(2n). Yields at least |A|
/// distinct solutions of A^n + X = A^(2n).
WitnessReport conjugate_witnesses(const PSet& a, std::int64_t n,
                                  const std::vector<std::int64_t>& x_tuple);

/// Largest m with 2^(m-1) <= solution_count: a set whose sumset equation
/// has `solution_count` solutions has image size at most this bound under
/// any isomorphism.
int image_size_bound(std::int64_t solution_count);

}  // namespace powsgp

#endif  // POWSGP_LEMMAS_HPP
