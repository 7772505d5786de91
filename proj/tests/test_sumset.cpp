#include <random>
#include <unordered_map>

#include "doctest.h"
#include "helpers.hpp"
#include "powsgp/errors.hpp"
#include "powsgp/sumset.hpp"

using namespace powsgp;

namespace {

const PSet::Ground& N() { return NumericalSemigroup::naturals(); }

// Compares an add result against the double-loop membership oracle on a
// window wide enough to decide equality of the canonical forms.
void check_against_oracle(const PSet& x, const PSet& y) {
  const std::int64_t window = testing::comparison_window(x, y);
  PSet sum = add(x, y);
  CHECK(truncate(sum, window) == testing::sumset_membership_oracle(x, y, window));
}

}  // namespace

TEST_CASE("adding the identity") {
  for (const auto& g : {N(), NumericalSemigroup::build({2, 3})}) {
    PSet zero = PSet::singleton(g, 0);
    for (const PSet& x : testing::canonical_family(g, 4, 6)) {
      CHECK(add(x, zero) == x);
    }
  }
}

TEST_CASE("small sums") {
  PSet a = PSet::finite(N(), {0, 1});
  CHECK(add(a, a) == PSet::finite(N(), {0, 1, 2}));

  PSet h2 = PSet::with_tail(N(), {0}, 2);
  CHECK(add(h2, h2) == h2);  // an idempotent

  auto s35 = NumericalSemigroup::build({3, 5});
  CHECK(add(PSet::finite(s35, {0, 3}), PSet::finite(s35, {0, 5})) ==
        PSet::finite(s35, {0, 3, 5, 8}));
}

TEST_CASE("powers") {
  CHECK(power(PSet::finite(N(), {0, 1}), 3) == PSet::finite(N(), {0, 1, 2, 3}));
  PSet x = PSet::with_tail(N(), {0, 2}, 5);
  CHECK(power(x, 1) == x);
  auto s35 = NumericalSemigroup::build({3, 5});
  CHECK(power(PSet::finite(s35, {0, 3}), 2) == PSet::finite(s35, {0, 3, 6}));
  CHECK_THROWS_AS(power(x, 0), input_error);
}

TEST_CASE("translate") {
  CHECK(translate(PSet::finite(N(), {0, 1}), 3, N()) == PSet::finite(N(), {3, 4}));
  CHECK(translate(PSet::finite(N(), {3, 5}), -3, N()) == PSet::finite(N(), {0, 2}));
  CHECK(translate(PSet::semiline(N(), 7), -7, N()) == PSet::full(N()));

  auto s23 = NumericalSemigroup::build({2, 3});
  CHECK(translate(PSet::finite(N(), {0, 1}), 2, s23) == PSet::finite(s23, {2, 3}));
  CHECK_THROWS_AS(translate(PSet::finite(N(), {0, 1}), -1, N()), input_error);
  CHECK_THROWS_AS(translate(PSet::finite(N(), {0, 1}), 0, s23), input_error);
  // a tail that would cover a gap of the target is rejected
  CHECK_THROWS_AS(translate(PSet::full(N()), 0, s23), input_error);
  // shifting a tail across ground gaps keeps membership exact
  auto s35 = NumericalSemigroup::build({3, 5});
  CHECK(translate(PSet::semiline(s35, 4), -5, N()) == PSet::with_tail(N(), {0, 1}, 3));
}

TEST_CASE("window truncation") {
  BitVec expect;
  expect.set(2);
  expect.set(3);
  expect.set(4);
  CHECK(truncate(PSet::semiline(N(), 2), 4) == expect);

  BitVec zero_only;
  zero_only.set(0);
  CHECK(truncate(PSet::finite(N(), {0, 9}), 4) == zero_only);

  auto s23 = NumericalSemigroup::build({2, 3});
  BitVec members;
  members.set(0);
  members.set(2);
  members.set(3);
  CHECK(truncate(PSet::full(s23), 3) == members);
  CHECK_THROWS_AS(truncate(PSet::full(s23), -1), input_error);
}

TEST_CASE("ground mismatch is rejected") {
  auto s23 = NumericalSemigroup::build({2, 3});
  CHECK_THROWS_AS(add(PSet::finite(N(), {0, 1}), PSet::finite(s23, {0, 2})), input_error);
}

TEST_CASE("threshold caps") {
  SumOptions tight;
  tight.max_threshold = 10;
  PSet t9 = PSet::semiline(N(), 9);
  CHECK_THROWS_AS(add(t9, t9, tight), cap_error);
  CHECK_THROWS_AS(translate(t9, 5, N(), tight), cap_error);
}

// The exhaustive algebra checks: every canonical set with head values up to
// 6 and threshold up to 8 over N, plus smaller families over gapped
// grounds. Pairs are verified against the membership oracle (which also
// gives commutativity); associativity runs over interned sum tables so the
// triple loop stays cheap.
TEST_CASE("add agrees with the membership oracle, exhaustively") {
  struct Case {
    PSet::Ground ground;
    std::int64_t max_head;
    std::int64_t max_tau;
  };
  const std::vector<Case> cases = {
      {N(), 6, 8},
      {NumericalSemigroup::build({2, 3}), 5, 7},
      {NumericalSemigroup::build({3, 5}), 6, 8},
  };
  for (const Case& c : cases) {
    auto family = testing::canonical_family(c.ground, c.max_head, c.max_tau);
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i; j < family.size(); ++j) {
        check_against_oracle(family[i], family[j]);
        CHECK(add(family[i], family[j]) == add(family[j], family[i]));
      }
    }
  }
}

TEST_CASE("associativity, exhaustive family plus sampling") {
  auto family = testing::canonical_family(N(), 6, 8);
  const std::uint32_t n = static_cast<std::uint32_t>(family.size());

  // Intern every set reachable by one add from the family.
  std::vector<PSet> store = family;
  std::unordered_map<PSet, std::uint32_t, PSetHash> ids;
  for (std::uint32_t i = 0; i < store.size(); ++i) ids.emplace(store[i], i);
  auto intern = [&](const PSet& p) {
    auto [it, fresh] = ids.emplace(p, static_cast<std::uint32_t>(store.size()));
    if (fresh) store.push_back(p);
    return it->second;
  };

  std::vector<std::uint32_t> level1(static_cast<std::size_t>(n) * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j <= i; ++j) {
      std::uint32_t r = intern(add(family[i], family[j]));
      level1[i * n + j] = r;
      level1[j * n + i] = r;
    }
  }
  const std::uint32_t m1 = static_cast<std::uint32_t>(store.size());
  REQUIRE(static_cast<std::size_t>(m1) * n < (std::size_t{1} << 25));

  // level2[r * n + k] = id of store[r] + family[k], filled on demand
  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> level2(static_cast<std::size_t>(m1) * n, kUnset);
  auto sum_with = [&](std::uint32_t r, std::uint32_t k) {
    std::uint32_t& slot = level2[static_cast<std::size_t>(r) * n + k];
    if (slot == kUnset) slot = intern(add(store[r], family[k]));
    return slot;
  };

  // (Xi + Xj) + Xk vs Xi + (Xj + Xk), the latter via commutativity;
  // plain comparisons keep the 56M-triple loop cheap
  std::size_t failures = 0;
  for (std::uint32_t i = 0; i < n && failures == 0; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::uint32_t ij = level1[i * n + j];
      const std::uint32_t* jrow = &level1[static_cast<std::size_t>(j) * n];
      for (std::uint32_t k = 0; k < n; ++k) {
        if (sum_with(ij, k) != sum_with(jrow[k], i)) {
          ++failures;
          FAIL_CHECK("associativity fails at (" << family[i].to_literal() << ", "
                                                << family[j].to_literal() << ", "
                                                << family[k].to_literal() << ")");
          break;
        }
      }
    }
  }
  CHECK(failures == 0);

  // sampled triples past the exhaustive family
  std::mt19937_64 rng(0xA55);
  for (const auto& g : {N(), NumericalSemigroup::build({3, 5, 7})}) {
    for (int t = 0; t < 10000; ++t) {
      PSet x = testing::random_pset(g, rng, false);
      PSet y = testing::random_pset(g, rng, false);
      PSet z = testing::random_pset(g, rng, false);
      if (add(add(x, y), z) != add(x, add(y, z))) {
        FAIL("sampled associativity fails for " << x.to_literal() << ", " << y.to_literal()
                                                << ", " << z.to_literal());
      }
    }
  }
}

TEST_CASE("minimum is additive") {
  auto family = testing::canonical_family(NumericalSemigroup::build({3, 5}), 5, 8);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i; j < family.size(); ++j) {
      CHECK(add(family[i], family[j]).min() == family[i].min() + family[j].min());
    }
  }
}

TEST_CASE("semiline identity") {
  std::mt19937_64 rng(0xB77);
  for (const auto& g : {N(), NumericalSemigroup::build({2, 3}),
                        NumericalSemigroup::build({3, 5})}) {
    for (int t = 0; t < 200; ++t) {
      PSet x = testing::random_pset(g, rng, false);
      std::int64_t k = g->frobenius() + 1 + testing::pick(rng, 40);
      CHECK(add(PSet::semiline(g, k), x) == PSet::semiline(g, k + x.min()));
    }
  }
}

TEST_CASE("sumset cardinality lower bound") {
  std::mt19937_64 rng(0xC88);
  for (int t = 0; t < 2000; ++t) {
    PSet x = testing::random_pset(N(), rng, false);
    PSet y = testing::random_pset(N(), rng, false);
    if (!x.is_finite() || !y.is_finite()) continue;
    PSet s = add(x, y);
    CHECK(s.head_count() + 1 >= x.head_count() + y.head_count());
  }
}
