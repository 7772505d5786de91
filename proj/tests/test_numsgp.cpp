#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "powsgp/errors.hpp"
#include "powsgp/numsgp.hpp"

using namespace powsgp;

TEST_CASE("construction from generators") {
  auto n = NumericalSemigroup::build({1});
  CHECK(n->frobenius() == -1);
  CHECK(n->gaps().empty());

  auto s23 = NumericalSemigroup::build({2, 3});
  CHECK(s23->frobenius() == 1);
  CHECK(s23->gaps() == std::vector<std::int64_t>{1});

  auto s35 = NumericalSemigroup::build({3, 5});
  CHECK(s35->frobenius() == 7);
  CHECK(s35->gaps() == std::vector<std::int64_t>{1, 2, 4, 7});

  auto s357 = NumericalSemigroup::build({3, 5, 7});
  CHECK(s357->frobenius() == 4);
  CHECK(s357->gaps() == std::vector<std::int64_t>{1, 2, 4});

  CHECK_THROWS_AS(NumericalSemigroup::build({4, 6}), input_error);
  CHECK_THROWS_AS(NumericalSemigroup::build({}), input_error);
  CHECK_THROWS_AS(NumericalSemigroup::build({0, 3}), input_error);
}

TEST_CASE("membership") {
  auto s23 = NumericalSemigroup::build({2, 3});
  CHECK(!s23->contains(1));
  CHECK(s23->contains(0));
  CHECK(NumericalSemigroup::naturals()->contains(0));
  auto s35 = NumericalSemigroup::build({3, 5});
  CHECK(s35->contains(8));
  CHECK(!s35->contains(-4));
  CHECK(s35->contains(1000000007));
}

TEST_CASE("the no-zero variant") {
  auto s = NumericalSemigroup::build({1}, false);
  CHECK(!s->contains(0));
  CHECK(s->contains(1));
  CHECK(s->frobenius() == 0);
  CHECK(s->gaps().empty());
  CHECK(s->gaps(true) == std::vector<std::int64_t>{0});

  auto s23 = NumericalSemigroup::build({2, 3}, false);
  CHECK(s23->frobenius() == 1);
  CHECK(!s23->contains(0));
  CHECK(s23->gaps() == std::vector<std::int64_t>{1});
  CHECK(s23->gaps(true) == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("frobenius agrees with the closure oracle") {
  const std::vector<std::vector<std::int64_t>> cases = {
      {1}, {2, 3}, {3, 5}, {3, 5, 7}, {4, 7}, {5, 7, 9}, {6, 10, 15}, {11, 13},
  };
  for (const auto& gens : cases) {
    for (bool zero : {true, false}) {
      auto s = NumericalSemigroup::build(gens, zero);
      CHECK(s->frobenius() == testing::frobenius_closure_oracle(gens, zero));
    }
  }
}

TEST_CASE("everything above the Frobenius number is a member") {
  for (const auto& gens : {std::vector<std::int64_t>{2, 3}, {3, 5}, {3, 5, 7}, {1}}) {
    auto s = NumericalSemigroup::build(gens);
    for (std::int64_t n = s->frobenius() + 1; n <= s->frobenius() + 1000; ++n) {
      CHECK(s->contains(n));
    }
  }
}

TEST_CASE("closure under addition, sampled") {
  std::mt19937_64 rng(7);
  for (const auto& gens : {std::vector<std::int64_t>{2, 3}, {3, 5}, {5, 7, 9}}) {
    auto s = NumericalSemigroup::build(gens);
    auto members = s->members_upto(s->frobenius() + 40);
    for (int i = 0; i < 10000; ++i) {
      std::int64_t a = members[rng() % members.size()];
      std::int64_t b = members[rng() % members.size()];
      CHECK(s->contains(a + b));
    }
  }
}

TEST_CASE("sieve closure within its window") {
  for (const auto& gens : {std::vector<std::int64_t>{3, 5}, {3, 5, 7}, {4, 7}}) {
    auto s = NumericalSemigroup::build(gens);
    for (std::int64_t a = 0; a <= s->frobenius() + 1; ++a) {
      for (std::int64_t b = a; a + b <= s->frobenius() + 1; ++b) {
        if (s->contains(a) && s->contains(b)) CHECK(s->contains(a + b));
      }
    }
  }
}

TEST_CASE("rebuilding from the member set gives the same structure") {
  for (const auto& gens : {std::vector<std::int64_t>{2, 3}, {3, 5}, {3, 5, 7}, {11, 13}}) {
    for (bool zero : {true, false}) {
      auto s = NumericalSemigroup::build(gens, zero);
      std::vector<std::int64_t> members =
          s->members_upto(s->frobenius() + 1 + gens.back());
      std::erase(members, 0);
      auto rebuilt = NumericalSemigroup::build(members, zero);
      CHECK(s->same_set(*rebuilt));
    }
  }
}

TEST_CASE("next_member and members_upto") {
  auto s35 = NumericalSemigroup::build({3, 5});
  CHECK(s35->next_member(-5) == 0);
  CHECK(s35->next_member(1) == 3);
  CHECK(s35->next_member(4) == 5);
  CHECK(s35->next_member(7) == 8);
  CHECK(s35->members_upto(9) == std::vector<std::int64_t>{0, 3, 5, 6, 8, 9});
  CHECK(s35->min_nonzero() == 3);
}

TEST_CASE("text form round trip") {
  for (const auto& gens : {std::vector<std::int64_t>{2, 3}, {3, 5, 7}}) {
    for (bool zero : {true, false}) {
      auto s = NumericalSemigroup::build(gens, zero);
      auto back = NumericalSemigroup::parse_text(s->to_text());
      CHECK(s->same_set(*back));
    }
  }
  CHECK(NumericalSemigroup::parse_text("<2,3;0>")->frobenius() == 1);
  CHECK_THROWS_AS(NumericalSemigroup::parse_text("2,3;0"), input_error);
  CHECK_THROWS_AS(NumericalSemigroup::parse_text("<2,3>"), input_error);
  CHECK_THROWS_AS(NumericalSemigroup::parse_text("<2,3;maybe>"), input_error);
}
