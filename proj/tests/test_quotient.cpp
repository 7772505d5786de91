#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "powsgp/errors.hpp"
#include "powsgp/quotient.hpp"
#include "powsgp/sumset.hpp"

using namespace powsgp;

namespace {
const PSet::Ground& N() { return NumericalSemigroup::naturals(); }
}  // namespace

TEST_CASE("normal forms") {
  auto s35 = NumericalSemigroup::build({3, 5});
  CHECK(normalize(PSet::finite(s35, {3, 5})) == PSet::finite(N(), {0, 2}));

  auto s23 = NumericalSemigroup::build({2, 3});
  CHECK(normalize(PSet::full(s23)) == PSet::with_tail(N(), {0}, 2));

  CHECK(normalize(PSet::with_tail(s23, {2}, 5)) == PSet::with_tail(N(), {0}, 3));

  // already normalized inputs stay put
  CHECK(normalize(PSet::finite(N(), {0, 4})) == PSet::finite(N(), {0, 4}));
}

TEST_CASE("conjugacy") {
  auto s23 = NumericalSemigroup::build({2, 3});
  PSet a = PSet::finite(s23, {2, 4});
  PSet b = PSet::finite(s23, {4, 6});
  PSet c = PSet::finite(s23, {2, 5});
  CHECK(conjugate_related(a, b));
  CHECK(conjugate_related(a, a));
  CHECK(!conjugate_related(a, c));
  CHECK_THROWS_AS(conjugate_related(a, PSet::finite(N(), {0, 2})), input_error);
}

TEST_CASE("lifting class representatives") {
  auto s23 = NumericalSemigroup::build({2, 3});
  CHECK(lift(PSet::finite(N(), {0, 1}), s23, 2) == PSet::finite(s23, {2, 3}));
  auto s35 = NumericalSemigroup::build({3, 5});
  CHECK(lift(PSet::singleton(N(), 0), s35, 8) == PSet::singleton(s35, 8));
  CHECK_THROWS_AS(lift(PSet::finite(N(), {0, 1}), s23, 1), input_error);
  CHECK_THROWS_AS(lift(PSet::finite(N(), {1, 2}), s23, 2), precondition_error);
  CHECK_THROWS_AS(lift(PSet::finite(s23, {0, 2}), s23, 2), input_error);
}

TEST_CASE("the normal form map is a homomorphism") {
  std::mt19937_64 rng(51);
  for (const auto& g : {N(), NumericalSemigroup::build({2, 3}),
                        NumericalSemigroup::build({3, 5}),
                        NumericalSemigroup::build({3, 5, 7})}) {
    for (int t = 0; t < 150; ++t) {
      PSet x = testing::random_pset(g, rng, false);
      PSet y = testing::random_pset(g, rng, false);
      CHECK(normalize(add(x, y)) == add(normalize(x), normalize(y)));
    }
  }
}

TEST_CASE("conjugacy is a congruence, sampled") {
  std::mt19937_64 rng(52);
  auto s23 = NumericalSemigroup::build({2, 3});
  int related_pairs = 0;
  for (int t = 0; t < 400; ++t) {
    PSet x = testing::random_pset(s23, rng, false);
    std::int64_t shift = s23->next_member(2 + testing::pick(rng, 6));
    PSet y = translate(x, shift, s23);  // conjugate to x by construction
    PSet z = testing::random_pset(s23, rng, false);
    REQUIRE(conjugate_related(x, y));
    CHECK(conjugate_related(add(x, z), add(y, z)));
    ++related_pairs;
  }
  CHECK(related_pairs == 400);
}

TEST_CASE("lift round trips") {
  std::mt19937_64 rng(53);
  for (const auto& g : {NumericalSemigroup::build({2, 3}),
                        NumericalSemigroup::build({3, 5, 7})}) {
    for (int t = 0; t < 100; ++t) {
      PSet a = testing::random_pset(N(), rng, /*force_zero=*/true);
      std::int64_t k = g->frobenius() + 1 + testing::pick(rng, 50);
      CHECK(normalize(lift(a, g, k)) == a);
    }
  }
}

TEST_CASE("conjugacy agrees with the witness identity") {
  std::mt19937_64 rng(54);
  auto s35 = NumericalSemigroup::build({3, 5});
  for (int t = 0; t < 120; ++t) {
    PSet x = testing::random_pset(s35, rng, false);
    PSet y = testing::random_pset(s35, rng, false);
    if (!x.is_finite() || !y.is_finite()) continue;
    bool related = conjugate_related(x, y);
    auto witness = conjugacy_witness(x, y);
    CHECK(related == witness.has_value());
    if (witness) {
      CHECK(translate(x, witness->first, s35) == translate(y, witness->second, s35));
    }
    if (related) {
      // the defining identity with the minimal shifts: X + min Y = Y + min X
      CHECK(translate(x, y.min(), s35) == translate(y, x.min(), s35));
    }
  }
}
