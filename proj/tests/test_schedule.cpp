#include "doctest.h"
#include "odoprime/rng.hpp"
#include "odoprime/schedule.hpp"
#include "test_helpers.hpp"

using namespace odoprime;

TEST_CASE("alphabet sizes: paper preset follows the 10^k rule") {
  auto sched = AlphabetSchedule::paper(1100);
  CHECK(sched->alphabet_size(5) == 8);
  CHECK(sched->alphabet_size(100) == 2);
  CHECK(sched->alphabet_size(1000) == 3);
  // Spot-assert the whole rule on a sample of indices.
  for (int i : {1, 2, 3, 7, 9, 10, 11, 50, 99, 101, 150, 200, 999, 1001}) {
    CHECK(sched->alphabet_size(i) == 8);
  }
  CHECK(sched->e_at(100)->kind == EKind::WType);
  CHECK(sched->e_at(1000)->kind == EKind::Empty);
  CHECK_THROWS_AS(sched->alphabet_size(1101), RangeError);
  CHECK_THROWS_AS(sched->alphabet_size(0), RangeError);
}

TEST_CASE("alphabet sizes: desk preset reads its configuration") {
  auto sched = testing::desk_small();
  CHECK(sched->alphabet_size(4) == 6);
  CHECK(sched->alphabet_size(3) == 5);
  CHECK(sched->alphabet_size(5) == 8);
}

TEST_CASE("q products") {
  auto paper = AlphabetSchedule::paper(120);
  CHECK(paper->q(1) == 1);
  CHECK(paper->q(4) == 512);
  auto desk = testing::desk_small();
  CHECK(desk->q(1) == 1);
  CHECK(desk->q(5) == 1920);  // 8*8*5*6
  for (int i = 1; i <= desk->depth_limit(); ++i)
    CHECK(desk->q(i + 1) == desk->q(i) * desk->alphabet_size(i));
  for (int i = 1; i <= 119; ++i)
    CHECK(paper->q(i + 1) == paper->q(i) * paper->alphabet_size(i));
}

TEST_CASE("encode/decode") {
  auto paper = AlphabetSchedule::paper(50);
  auto zero = paper->encode(0);
  for (int d : zero) CHECK(d == 0);
  auto nine = paper->encode(9);
  CHECK(nine[0] == 1);
  CHECK(nine[1] == 1);
  for (std::size_t i = 2; i < nine.size(); ++i) CHECK(nine[i] == 0);
  CHECK(paper->decode(nine) == 9);

  SUBCASE("round trip on random values") {
    auto desk = testing::desk_small();
    Rng rng(0xA11CE);
    for (int t = 0; t < 1000; ++t) {
      BigInt v = 0;
      for (int i = 1; i <= desk->depth_limit(); ++i)
        v += BigInt(rng.below_int(desk->alphabet_size(i))) * desk->q(i);
      CHECK(desk->decode(desk->encode(v)) == v);
    }
  }

  CHECK_THROWS_AS(paper->encode(-1), RangeError);
  CHECK_THROWS_AS(paper->encode(paper->q_top()), RangeError);
  CHECK_THROWS_AS(paper->decode({8}), RangeError);
}

TEST_CASE("schedule validation") {
  CHECK_THROWS_AS(AlphabetSchedule::desk(7, {}, 10), ConfigError);
  CHECK_THROWS_AS(AlphabetSchedule::desk(8, {{1, EKind::Empty, 4}}, 10), ConfigError);
  CHECK_THROWS_AS(AlphabetSchedule::desk(8, {{3, EKind::Empty, 1}}, 10), ConfigError);
  CHECK_THROWS_AS(AlphabetSchedule::desk(8, {{3, EKind::Empty, 4}, {3, EKind::WType, 4}}, 10),
                  ConfigError);
}
