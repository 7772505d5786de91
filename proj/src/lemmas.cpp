#include "powsgp/lemmas.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "powsgp/errors.hpp"

namespace powsgp {

namespace {

constexpr std::size_t kMaxWitnessBase = 6;   // |A| cap for the 2^(|A|-1) enumeration
constexpr std::size_t kMaxWideDomain = 20;   // candidate cap for the wide cross-check

std::int64_t count_distinct(const std::vector<PSet>& sets) {
  std::unordered_set<PSet, PSetHash> seen(sets.begin(), sets.end());
  return static_cast<std::int64_t>(seen.size());
}

}  // namespace

bool is_idempotent(const PSet& e) { return add(e, e) == e; }

bool doubleton_absorb_test(const PSet& e, std::int64_t y) {
  if (!e.member(0)) throw precondition_error("idempotent must contain 0");
  if (!is_idempotent(e)) throw precondition_error("set is not idempotent");
  if (y < 0 || !e.ground()->contains(y)) {
    throw input_error("probe is not a member of the ground semigroup: " + std::to_string(y));
  }
  PSet doubleton = PSet::finite(e.ground(), {0, y});
  return add(doubleton, e) == e;
}

std::pair<PSet, PSet> halo_pair(const PSet::Ground& ground, std::int64_t y) {
  if (!ground->includes_zero()) {
    throw input_error("halo sets are defined over the monoid variant (0 in H)");
  }
  if (y == 0 || !ground->contains(y)) {
    throw precondition_error("halo base must be a non-zero member: " + std::to_string(y));
  }
  PSet halo = PSet::with_tail(ground, {0}, y);
  PSet pierced = PSet::with_tail(ground, {0}, y + 1);
  return {std::move(halo), std::move(pierced)};
}

bool member_by_halo(const PSet& x, std::int64_t y) {
  if (!x.member(0)) throw precondition_error("halo membership test needs 0 in X");
  auto [halo, pierced] = halo_pair(x.ground(), y);
  return add(halo, x) == add(pierced, x);
}

WitnessReport lemma_q_witnesses(const PSet& a, std::int64_t n) {
  if (!a.is_finite()) throw input_error("witness construction needs a finite base set");
  if (n < 3) throw input_error("exponent must be at least 3");
  if (!a.member(0)) throw precondition_error("base set must contain 0");
  std::vector<std::int64_t> nonzero = a.head_values();
  nonzero.erase(std::remove(nonzero.begin(), nonzero.end(), 0), nonzero.end());
  if (nonzero.size() + 1 > kMaxWitnessBase) {
    throw cap_error("base set larger than the witness cap (" +
                    std::to_string(kMaxWitnessBase) + ")");
  }

  PSet an = power(a, n);
  PSet an1 = power(a, n - 1);

  WitnessReport report;
  report.bound_claimed = std::int64_t{1} << nonzero.size();
  for (std::uint32_t mask = 0; mask < (1u << nonzero.size()); ++mask) {
    std::vector<std::int64_t> removed;
    for (std::size_t i = 0; i < nonzero.size(); ++i) {
      if (mask & (1u << i)) removed.push_back(nonzero[i]);
    }
    PSet q = difference(an1, removed);
    bool ok = add(q, a) == an;
    report.witnesses.push_back(std::move(q));
    report.verified.push_back(ok);
  }
  report.distinct_count = count_distinct(report.witnesses);
  return report;
}

std::vector<PSet> enumerate_translate_solutions(const PSet& a, const PSet& b,
                                                const EnumOptions& opts) {
  if (!a.is_finite() || !b.is_finite()) {
    throw input_error("solution enumeration needs finite operands");
  }
  if (!a.same_ground(b)) throw input_error("operands live over different ground semigroups");
  const NumericalSemigroup& g = *a.ground();
  const std::vector<std::int64_t> avals = a.head_values();
  const std::int64_t max_b = static_cast<std::int64_t>(b.head_bits().find_last());

  // Necessary containment: x in X forces x + A ⊆ B.
  std::vector<std::int64_t> domain;
  for (std::int64_t d : g.members_upto(max_b - avals.front())) {
    bool ok = true;
    for (std::int64_t v : avals) {
      if (!b.member(d + v)) {
        ok = false;
        break;
      }
    }
    if (ok) domain.push_back(d);
  }
  if (domain.size() > std::min<std::size_t>(opts.max_domain, 30)) {
    throw cap_error("solution domain too large: |D| = " + std::to_string(domain.size()) +
                    " exceeds cap " + std::to_string(opts.max_domain));
  }

  // X + A ⊆ B holds for every X ⊆ D by construction, so X is a solution
  // exactly when the shifted copies of A cover B.
  std::vector<BitVec> cover(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    cover[i].or_shifted(a.head_bits(), static_cast<std::size_t>(domain[i]));
  }
  const BitVec& target = b.head_bits();

  std::vector<PSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << domain.size()); ++mask) {
    BitVec joint;
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) joint.or_shifted(cover[i], 0);
    }
    if (joint == target) {
      std::vector<std::int64_t> elems;
      for (std::size_t i = 0; i < domain.size(); ++i) {
        if (mask & (std::uint64_t{1} << i)) elems.push_back(domain[i]);
      }
      out.push_back(PSet::finite(a.ground(), elems));
    }
  }
  std::sort(out.begin(), out.end(), [](const PSet& lhs, const PSet& rhs) {
    return lhs.head_values() < rhs.head_values();
  });
  return out;
}

std::vector<PSet> enumerate_translate_solutions_wide(const PSet& a, const PSet& b) {
  if (!a.is_finite() || !b.is_finite()) {
    throw input_error("solution enumeration needs finite operands");
  }
  if (!a.same_ground(b)) throw input_error("operands live over different ground semigroups");
  const std::int64_t max_b = static_cast<std::int64_t>(b.head_bits().find_last());
  std::vector<std::int64_t> candidates = a.ground()->members_upto(max_b);
  if (candidates.size() > kMaxWideDomain) {
    throw cap_error("wide cross-check domain too large: " + std::to_string(candidates.size()));
  }
  std::vector<PSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << candidates.size()); ++mask) {
    std::vector<std::int64_t> elems;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) elems.push_back(candidates[i]);
    }
    PSet x = PSet::finite(a.ground(), elems);
    if (add(x, a) == b) out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), [](const PSet& lhs, const PSet& rhs) {
    return lhs.head_values() < rhs.head_values();
  });
  return out;
}

WitnessReport conjugate_witnesses(const PSet& a, std::int64_t n,
                                  const std::vector<std::int64_t>& x_tuple) {
  if (!a.is_finite()) throw input_error("witness construction needs a finite base set");
  if (n < 2) throw input_error("exponent must be at least 2");
  if (x_tuple.size() != static_cast<std::size_t>(n - 1)) {
    throw input_error("tuple must have exactly n-1 entries");
  }
  std::int64_t x = 0;
  for (std::int64_t entry : x_tuple) {
    if (!a.member(entry)) {
      throw input_error("tuple entry not in the base set: " + std::to_string(entry));
    }
    x += entry;
  }
  const std::int64_t first = x_tuple.front();

  PSet an = power(a, n);
  PSet a2n = add(an, an);

  WitnessReport report;
  report.bound_claimed = static_cast<std::int64_t>(a.head_count());
  report.witnesses.push_back(an);
  report.verified.push_back(add(an, an) == a2n);
  for (std::int64_t v : a.head_values()) {
    if (v == first) continue;
    PSet witness = difference(an, {v + x});
    report.verified.push_back(add(an, witness) == a2n);
    report.witnesses.push_back(std::move(witness));
  }
  report.distinct_count = count_distinct(report.witnesses);
  return report;
}

int image_size_bound(std::int64_t solution_count) {
  if (solution_count < 1) throw input_error("solution count must be positive");
  return std::bit_width(static_cast<std::uint64_t>(solution_count));
}

}  // namespace powsgp
