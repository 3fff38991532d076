#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "orbitlab/rng.hpp"

using namespace orbitlab;

TEST_CASE("counter rng is a pure function of (seed, stream, index)") {
  auto a = rng_u64(7, 0, 42);
  auto b = rng_u64(7, 0, 42);
  REQUIRE(a == b);
  REQUIRE(rng_u64(7, 0, 43) != a);
  REQUIRE(rng_u64(7, 1, 42) != a);
  REQUIRE(rng_u64(8, 0, 42) != a);
}

TEST_CASE("order of evaluation does not matter") {
  std::vector<std::uint64_t> forward, backward;
  for (int i = 0; i < 100; ++i) forward.push_back(rng_u64(3, 5, i));
  for (int i = 99; i >= 0; --i) backward.push_back(rng_u64(3, 5, i));
  std::reverse(backward.begin(), backward.end());
  REQUIRE(forward == backward);
}

TEST_CASE("unit draws are dyadic rationals in [0,1)") {
  for (int i = 0; i < 200; ++i) {
    Q u = rng_unit_q(1, 2, i);
    REQUIRE(u >= 0);
    REQUIRE(u < 1);
    Z d = zden(u);
    while (d % 2 == 0) d /= 2;
    REQUIRE(d == 1);
  }
}

TEST_CASE("symmetric draws are centered and bounded") {
  Q T(20);
  Q sum(0);
  for (int i = 0; i < 2000; ++i) {
    Q t = rng_symmetric_q(9, 0, i, T);
    REQUIRE(qabs(t) <= T);
    sum += t;
  }
  REQUIRE(qabs(sum / 2000) < 1);  // loose law-of-large-numbers sanity check
}

TEST_CASE("rough equidistribution of low bits") {
  std::set<std::uint64_t> seen;
  int ones = 0;
  for (int i = 0; i < 4096; ++i) {
    auto v = rng_u64(11, 0, i);
    seen.insert(v);
    ones += v & 1;
  }
  REQUIRE(seen.size() == 4096);
  REQUIRE(ones > 1800);
  REQUIRE(ones < 2300);
}

TEST_CASE("rng_below stays in range") {
  for (int i = 0; i < 1000; ++i) REQUIRE(rng_below(5, 1, i, 17) < 17);
}
