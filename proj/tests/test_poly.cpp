#include <catch2/catch_amalgamated.hpp>

#include "orbitlab/poly.hpp"
#include "orbitlab/rng.hpp"

using namespace orbitlab;
using namespace orbitlab::poly;

namespace {
ZPoly zp(std::initializer_list<long> cs) {
  ZPoly r;
  for (long c : cs) r.emplace_back(c);
  return r;
}
}  // namespace

TEST_CASE("divmod and gcd over Q") {
  // (x^2 - 1) = (x - 1)(x + 1)
  QPoly a = to_q(zp({-1, 0, 1}));
  QPoly b = to_q(zp({-1, 1}));
  auto [q, r] = divmod(a, b);
  REQUIRE(r.empty());
  REQUIRE(degree(q) == 1);
  QPoly g = gcd(a, to_q(zp({1, 1})));
  REQUIRE(degree(g) == 1);
  REQUIRE(g[0] == 1);  // monic x + 1
}

TEST_CASE("ext_gcd produces Bezout cofactors") {
  QPoly a = to_q(zp({-2, 0, 1}));  // x^2 - 2
  QPoly b = to_q(zp({1, 1}));      // x + 1 (coprime to a)
  auto [g, s, t] = ext_gcd(a, b);
  REQUIRE(degree(g) == 0);
  QPoly check = add(mul(s, a), mul(t, b));
  REQUIRE(degree(check) == 0);
  REQUIRE(check[0] == g[0]);
}

TEST_CASE("resultant of classic pairs") {
  // Res(x^2 - 2, x - 3) = 3^2 - 2 = 7
  REQUIRE(resultant(to_q(zp({-2, 0, 1})), to_q(zp({-3, 1}))) == 7);
  // Res(x^2 - 2, x^2 - 3) = (sqrt3^2-2)^2 = 1
  REQUIRE(resultant(to_q(zp({-2, 0, 1})), to_q(zp({-3, 0, 1}))) == 1);
  // Shared root -> 0
  REQUIRE(resultant(to_q(zp({-2, 0, 1})), to_q(zp({-2, 0, 1}))) == 0);
  // disc(x^3+x^2-2x-1): Res(f, f') = -lc * disc; known disc = 49
  QPoly f = to_q(zp({-1, -2, 1, 1}));
  QPoly fp = to_q(zp({-2, 2, 3}));
  Q res = resultant(f, fp);
  REQUIRE(qabs(res) == 49);
}

TEST_CASE("sturm isolation finds all real roots") {
  // x^2 - 2: two roots near +-1.41421356
  auto roots = isolate_real_roots(zp({-2, 0, 1}));
  REQUIRE(roots.size() == 2);
  ZPoly f = zp({-2, 0, 1});
  for (auto& r : roots) refine_root(f, r, Q(1, Z(1) << 80));
  Q sqrt2_lo = parse_rational("1.41421356237309504880168");
  Q sqrt2_hi = parse_rational("1.41421356237309504880169");
  REQUIRE(roots[0].lo <= -sqrt2_lo);
  REQUIRE(roots[0].hi >= -sqrt2_hi);
  REQUIRE(roots[1].lo <= sqrt2_hi);
  REQUIRE(roots[1].hi >= sqrt2_lo);

  // x^3 + x^2 - 2x - 1: roots 2cos(2pi k/7), all in (-2, 2)
  auto cubic = isolate_real_roots(zp({-1, -2, 1, 1}));
  REQUIRE(cubic.size() == 3);
  // frozen decimals: 2cos(2pi/7) ~ 1.24697960, 2cos(4pi/7) ~ -0.44504187, 2cos(6pi/7) ~ -1.80193774
  ZPoly g = zp({-1, -2, 1, 1});
  for (auto& r : cubic) {
    refine_root(g, r, Q(1, Z(1) << 40));
    REQUIRE(r.lo > -2);
    REQUIRE(r.hi < 2);
  }
  REQUIRE(QInterval(parse_rational("-1.8019377359"), parse_rational("-1.8019377358")).contains(cubic[0]));
  REQUIRE(QInterval(parse_rational("-0.4450418680"), parse_rational("-0.4450418679")).contains(cubic[1]));
  REQUIRE(QInterval(parse_rational("1.2469796037"), parse_rational("1.2469796038")).contains(cubic[2]));

  // x^2 + 1: no real roots
  REQUIRE(isolate_real_roots(zp({1, 0, 1})).empty());
}

TEST_CASE("root refinement nests") {
  ZPoly f = zp({-2, 0, 1});
  auto roots = isolate_real_roots(f);
  QInterval wide = roots[1];
  QInterval tight = wide;
  refine_root(f, tight, Q(1, 1000));
  REQUIRE(wide.contains(tight));
  QInterval tighter = tight;
  refine_root(f, tighter, Q(1, Z(1) << 200));
  REQUIRE(tight.contains(tighter));
}

TEST_CASE("irreducibility: knowns") {
  REQUIRE(is_irreducible_over_q(zp({-2, 0, 1})));      // x^2-2
  REQUIRE(is_irreducible_over_q(zp({1, 0, 1})));       // x^2+1 (irreducible, just not real-rooted)
  REQUIRE(is_irreducible_over_q(zp({-1, -2, 1, 1})));  // the cos(2pi/7) cubic
  REQUIRE(is_irreducible_over_q(zp({1, 0, 0, 0, 1}))); // x^4+1: reducible mod every prime
  REQUIRE(is_irreducible_over_q(zp({1, 0, -10, 0, 1})));  // min poly of sqrt2+sqrt3
  REQUIRE(is_irreducible_over_q(zp({-5, 1})));         // linear
  REQUIRE(is_irreducible_over_q(zp({-2, 0, 0, 0, 0, 1})));  // x^5-2 (Eisenstein)

  REQUIRE_FALSE(is_irreducible_over_q(zp({-1, 0, 1})));      // (x-1)(x+1)
  REQUIRE_FALSE(is_irreducible_over_q(zp({6, -5, 1})));      // (x-2)(x-3)
  REQUIRE_FALSE(is_irreducible_over_q(zp({4, 0, -4, 0, 1})));  // (x^2-2)^2
  REQUIRE_FALSE(is_irreducible_over_q(zp({6, 0, -5, 0, 1})));  // (x^2-2)(x^2-3)
  REQUIRE_FALSE(is_irreducible_over_q(zp({2, 3, 1})));       // (x+1)(x+2)
  REQUIRE_FALSE(is_irreducible_over_q(zp({-6, 11, -6, 1}))); // (x-1)(x-2)(x-3)
}

TEST_CASE("irreducibility: random products are caught") {
  for (int trial = 0; trial < 40; ++trial) {
    ZPoly a{Z(long(rng_below(21, 0, trial, 9)) - 4), Z(1)};
    ZPoly b{Z(long(rng_below(21, 1, trial, 9)) - 4), Z(long(rng_below(21, 2, trial, 3)) + 1)};
    ZPoly c{Z(long(rng_below(21, 3, trial, 9)) - 4), Z(long(rng_below(21, 4, trial, 9)) - 4), Z(1)};
    ZPoly prod = mul(mul(a, b), c);
    REQUIRE_FALSE(is_irreducible_over_q(prod));
  }
}

TEST_CASE("eval interval encloses exact evaluation") {
  ZPoly f = zp({-1, -2, 1, 1});
  QInterval x(Q(1, 4), Q(1, 3));
  QInterval y = eval_poly_interval(f, x);
  Q left = eval(to_q(f), Q(1, 4)), right = eval(to_q(f), Q(1, 3)), mid = eval(to_q(f), Q(7, 24));
  REQUIRE(y.lo <= left);
  REQUIRE(y.hi >= left);
  REQUIRE(y.lo <= right);
  REQUIRE(y.hi >= mid);
}
