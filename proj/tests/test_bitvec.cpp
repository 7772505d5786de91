#include <random>
#include <set>

#include "doctest.h"
#include "powsgp/bitvec.hpp"

using powsgp::BitVec;

TEST_CASE("bitvec basic operations") {
  BitVec v;
  CHECK(!v.any());
  CHECK(v.find_first() == BitVec::npos);
  v.set(3);
  v.set(70);
  CHECK(v.test(3));
  CHECK(v.test(70));
  CHECK(!v.test(4));
  CHECK(!v.test(1000));
  CHECK(v.count() == 2);
  CHECK(v.find_first() == 3);
  CHECK(v.find_next(3) == 70);
  CHECK(v.find_next(70) == BitVec::npos);
  CHECK(v.find_last() == 70);
  v.reset(70);
  CHECK(v.find_last() == 3);
  v.reset(3);
  CHECK(!v.any());
}

TEST_CASE("bitvec equality is denotation equality") {
  BitVec a, b;
  a.set(5);
  b.set(5);
  b.set(200);
  CHECK(a != b);
  b.reset(200);  // trims the top word
  CHECK(a == b);
  b.truncate(5);
  CHECK(!b.any());
}

TEST_CASE("bitvec set_range") {
  BitVec v;
  v.set_range(3, 200);
  CHECK(v.count() == 197);
  CHECK(!v.test(2));
  CHECK(v.test(3));
  CHECK(v.test(199));
  CHECK(!v.test(200));
  v.set_range(5, 5);  // empty range is a no-op
  CHECK(v.count() == 197);
}

TEST_CASE("bitvec or_shifted matches a reference model") {
  std::mt19937_64 rng(20240811);
  for (int round = 0; round < 200; ++round) {
    std::set<int> ma, mb;
    BitVec a, b;
    for (int i = 0; i < 12; ++i) {
      int p = static_cast<int>(rng() % 150);
      ma.insert(p);
      a.set(static_cast<std::size_t>(p));
      int q = static_cast<int>(rng() % 150);
      mb.insert(q);
      b.set(static_cast<std::size_t>(q));
    }
    std::size_t shift = rng() % 130;
    BitVec got = a;
    got.or_shifted(b, shift);
    std::set<int> want = ma;
    for (int q : mb) want.insert(q + static_cast<int>(shift));
    for (int p = 0; p < 300; ++p) {
      CHECK(got.test(static_cast<std::size_t>(p)) == (want.count(p) > 0));
    }
  }
}

TEST_CASE("bitvec or_shifted handles self-aliasing") {
  BitVec v;
  v.set(1);
  v.set(2);
  v.or_shifted(v, 2);
  CHECK(v.values() == std::vector<std::int64_t>{1, 2, 3, 4});
}

TEST_CASE("bitvec truncate and values") {
  BitVec v;
  v.set(0);
  v.set(63);
  v.set(64);
  v.set(128);
  v.truncate(64);
  CHECK(v.values() == std::vector<std::int64_t>{0, 63});
  v.truncate(0);
  CHECK(!v.any());
}

TEST_CASE("bitvec truncate past the stored words is a no-op") {
  BitVec v;
  v.set(8);
  v.truncate(67);  // boundary word not present; nothing may change
  CHECK(v.values() == std::vector<std::int64_t>{8});
  v.set(100);
  v.truncate(67);
  CHECK(v.values() == std::vector<std::int64_t>{8});
}
