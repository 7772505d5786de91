#ifndef POWSGP_TESTS_HELPERS_HPP
#define POWSGP_TESTS_HELPERS_HPP

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "powsgp/pset.hpp"
#include "powsgp/sumset.hpp"

namespace powsgp::testing {

// Independent Frobenius oracle: grow the closure of the generators with a
// worklist instead of the sieve recurrence, then scan for the last gap.
inline std::int64_t frobenius_closure_oracle(const std::vector<std::int64_t>& gens,
                                             bool includes_zero) {
  std::int64_t lo = *std::min_element(gens.begin(), gens.end());
  std::int64_t hi = *std::max_element(gens.begin(), gens.end());
  std::int64_t bound = lo * hi + 2 * hi + 2;
  std::set<std::int64_t> members(gens.begin(), gens.end());
  std::vector<std::int64_t> work(gens.begin(), gens.end());
  while (!work.empty()) {
    std::int64_t v = work.back();
    work.pop_back();
    for (std::int64_t g : gens) {
      std::int64_t s = v + g;
      if (s <= bound && members.insert(s).second) work.push_back(s);
    }
  }
  std::int64_t frob = includes_zero ? -1 : 0;
  for (std::int64_t n = 1; n <= bound; ++n) {
    if (!members.contains(n)) frob = n;
  }
  return frob;
}

// Direct double-loop sumset membership on [0, window], built from member()
// queries only; independent of the shift-OR kernel.
inline BitVec sumset_membership_oracle(const PSet& x, const PSet& y, std::int64_t window) {
  std::vector<std::int64_t> xs, ys;
  for (std::int64_t n = 0; n <= window; ++n) {
    if (x.member(n)) xs.push_back(n);
    if (y.member(n)) ys.push_back(n);
  }
  BitVec out;
  for (std::int64_t a : xs) {
    for (std::int64_t b : ys) {
      if (a + b <= window) out.set(static_cast<std::size_t>(a + b));
    }
  }
  return out;
}

// A window large enough that agreement on it implies equality of the two
// sumsets as canonical sets (see the canonical-form window bound).
inline std::int64_t comparison_window(const PSet& x, const PSet& y) {
  const std::int64_t frob = x.ground()->frobenius();
  auto reach = [&](const PSet& s) {
    std::int64_t head = s.head_bits().any()
                            ? static_cast<std::int64_t>(s.head_bits().find_last())
                            : 0;
    return std::max(head, s.is_tail() ? std::max(s.threshold(), frob + 1) : 0);
  };
  return reach(x) + reach(y) + frob + 2;
}

// Every canonical PSet over `ground` with head values <= max_head and tail
// threshold <= max_tau, deduplicated and in a deterministic order.
inline std::vector<PSet> canonical_family(const PSet::Ground& ground, std::int64_t max_head,
                                          std::int64_t max_tau) {
  std::vector<PSet> out;
  auto push_unique = [&](const PSet& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  const std::vector<std::int64_t> pool = ground->members_upto(max_head);
  const std::size_t k = pool.size();
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::int64_t> elems;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) elems.push_back(pool[i]);
    }
    push_unique(PSet::finite(ground, elems));
  }
  for (std::int64_t tau = 0; tau <= max_tau; ++tau) {
    std::vector<std::int64_t> below;
    for (std::int64_t v : pool) {
      if (v < tau) below.push_back(v);
    }
    const std::size_t kb = below.size();
    for (std::uint32_t mask = 0; mask < (1u << kb); ++mask) {
      std::vector<std::int64_t> head;
      for (std::size_t i = 0; i < kb; ++i) {
        if (mask & (1u << i)) head.push_back(below[i]);
      }
      push_unique(PSet::with_tail(ground, head, tau));
    }
  }
  return out;
}

inline std::int64_t pick(std::mt19937_64& rng, std::int64_t n) {
  return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
}

inline PSet random_pset(const PSet::Ground& g, std::mt19937_64& rng, bool force_zero) {
  const std::int64_t frob = g->frobenius();
  if (pick(rng, 2) == 0) {
    const std::vector<std::int64_t> pool = g->members_upto(frob + 15);
    std::vector<std::int64_t> elems;
    if (force_zero) elems.push_back(0);
    const std::int64_t want = 1 + pick(rng, 4);
    for (std::int64_t i = 0; i < want; ++i) {
      elems.push_back(pool[static_cast<std::size_t>(pick(rng, static_cast<std::int64_t>(pool.size())))]);
    }
    return PSet::finite(g, elems);
  }
  const std::int64_t tau = pick(rng, frob + 12);
  std::vector<std::int64_t> head;
  if (force_zero && tau > 0) head.push_back(0);
  const std::vector<std::int64_t> pool = g->members_upto(tau - 1);
  if (!pool.empty()) {
    const std::int64_t want = pick(rng, 4);
    for (std::int64_t i = 0; i < want; ++i) {
      head.push_back(pool[static_cast<std::size_t>(pick(rng, static_cast<std::int64_t>(pool.size())))]);
    }
  }
  return PSet::with_tail(g, head, tau);
}

}  // namespace powsgp::testing

#endif  // POWSGP_TESTS_HELPERS_HPP
