#include "doctest.h"
#include "powsgp/errors.hpp"
#include "powsgp/io.hpp"
#include "powsgp/lemmas.hpp"

using namespace powsgp;

TEST_CASE("set JSON round trip") {
  const PSet::Ground& n = NumericalSemigroup::naturals();
  for (const PSet& x : {PSet::finite(n, {0, 2, 5}), PSet::with_tail(n, {0, 2}, 7),
                        PSet::full(n)}) {
    CHECK(pset_from_json(n, to_json(x)) == x);
  }
  nlohmann::json finite = to_json(PSet::finite(n, {0, 2}));
  CHECK(finite.at("threshold").is_null());
  CHECK(finite.at("head") == std::vector<std::int64_t>{0, 2});
  CHECK_THROWS_AS(pset_from_json(n, nlohmann::json::array()), input_error);
}

TEST_CASE("semigroup and report JSON shapes") {
  auto s = NumericalSemigroup::build({3, 5});
  nlohmann::json j = to_json(*s);
  CHECK(j.at("frobenius") == 7);
  CHECK(j.at("includes_zero") == true);
  CHECK(j.at("generators") == std::vector<std::int64_t>{3, 5});

  WitnessReport rep = lemma_q_witnesses(PSet::finite(NumericalSemigroup::naturals(), {0, 1}), 3);
  nlohmann::json r = to_json(rep);
  CHECK(r.at("bound_claimed") == 2);
  CHECK(r.at("distinct_count") == 2);
  CHECK(r.at("witnesses").size() == 2);
  CHECK(r.at("verified") == std::vector<bool>{true, true});
}
