#include <catch2/catch_amalgamated.hpp>

#include "orbitlab/numfield.hpp"
#include "orbitlab/rng.hpp"

using namespace orbitlab;

namespace {
FieldPtr sqrt2_field() { return make_field({Z(-2), Z(0), Z(1)}); }
FieldPtr cubic7_field() { return make_field({Z(-1), Z(-2), Z(1), Z(1)}); }

AlgebraicNumber random_element(const FieldPtr& f, std::uint64_t seed, std::uint64_t idx) {
  QPoly c;
  for (int k = 0; k < f->degree(); ++k) {
    long num = long(rng_below(seed, 10 + k, idx, 19)) - 9;
    long den = long(rng_below(seed, 20 + k, idx, 6)) + 1;
    c.emplace_back(num, den);
  }
  return AlgebraicNumber(f, std::move(c));
}
}  // namespace

TEST_CASE("make_field certifies structure") {
  auto f = sqrt2_field();
  REQUIRE(f->degree() == 2);
  auto r = f->roots(40);
  REQUIRE(QInterval(parse_rational("-1.41421356238"), parse_rational("-1.41421356237")).contains(r[0]));
  REQUIRE(QInterval(parse_rational("1.41421356237"), parse_rational("1.41421356238")).contains(r[1]));

  REQUIRE_THROWS_AS(make_field({Z(1), Z(0), Z(1)}), NotTotallyReal);    // x^2+1
  REQUIRE_THROWS_AS(make_field({Z(-1), Z(0), Z(1)}), NotIrreducible);   // (x-1)(x+1)
  REQUIRE_THROWS_AS(make_field({Z(1), Z(1)}), DegenerateInput);         // degree 1
  REQUIRE_THROWS_AS(make_field({Z(-3), Z(0), Z(0), Z(0), Z(1)}), NotTotallyReal);  // x^4-3

  auto c = cubic7_field();
  REQUIRE(c->degree() == 3);
  REQUIRE(c->roots(40).size() == 3);
}

TEST_CASE("identity embedding defaults to the largest root") {
  auto f = sqrt2_field();
  REQUIRE(f->identity_index() == 1);
  auto g = make_field({Z(-2), Z(0), Z(1)}, 0);
  REQUIRE(g->identity_index() == 0);
  REQUIRE(AlgebraicNumber::generator(g).sign_at() < 0);
  REQUIRE(AlgebraicNumber::generator(f).sign_at() > 0);
}

TEST_CASE("embed: generator, rationals, composite elements") {
  auto f = sqrt2_field();
  auto beta = AlgebraicNumber::generator(f);
  auto em = embed(beta, 100);
  REQUIRE(em.size() == 2);
  REQUIRE(em[0].is_definitely_negative());
  REQUIRE(em[1].is_definitely_positive());
  REQUIRE(em[1].width_below(-100));

  auto one = AlgebraicNumber::from_rational(f, Q(1));
  for (const auto& e : embed(one, 64)) REQUIRE(e.contains_q(Q(1)));

  // 1 + sqrt2 -> (1 - 1.41421..., 1 + 1.41421...)
  auto x = one + beta;
  auto ex = embed(x, 80);
  auto br0 = Interval::from_qinterval(QInterval(parse_rational("-0.4142135624"), parse_rational("-0.4142135623")), 128);
  auto br1 = Interval::from_qinterval(QInterval(parse_rational("2.4142135623"), parse_rational("2.4142135624")), 128);
  REQUIRE(ex[0].inside(br0));
  REQUIRE(ex[1].inside(br1));
}

TEST_CASE("exact arithmetic and inverses") {
  auto f = cubic7_field();
  auto b = AlgebraicNumber::generator(f);
  auto x = b * b - b * Q(2) + AlgebraicNumber::from_rational(f, Q(3, 7));
  auto inv = x.inverse();
  auto prod = x * inv;
  REQUIRE(prod.is_rational());
  REQUIRE(prod.rational_value() == 1);
  REQUIRE_THROWS(AlgebraicNumber::from_rational(f, Q(0)).inverse());
}

TEST_CASE("field norms: knowns and multiplicativity") {
  auto f = sqrt2_field();
  auto beta = AlgebraicNumber::generator(f);
  auto one_plus = AlgebraicNumber::from_rational(f, Q(1)) + beta;
  REQUIRE(field_norm(one_plus) == -1);
  REQUIRE(field_norm(AlgebraicNumber::from_rational(f, Q(0))) == 0);
  auto c = cubic7_field();
  REQUIRE(field_norm(AlgebraicNumber::from_rational(c, Q(2))) == 8);

  // norm(x) * norm(1/x) == 1 exactly
  for (int t = 0; t < 1000; ++t) {
    auto x = random_element(c, 77, t);
    if (x.is_zero()) continue;
    REQUIRE(field_norm(x) * field_norm(x.inverse()) == 1);
  }
}

TEST_CASE("embedding is multiplicative within enclosures") {
  auto c = cubic7_field();
  for (int t = 0; t < 1000; ++t) {
    auto x = random_element(c, 5, 2 * t);
    auto y = random_element(c, 5, 2 * t + 1);
    auto ex = embed(x, 80), ey = embed(y, 80), exy = embed(x * y, 80);
    for (int j = 0; j < 3; ++j) {
      auto prod = ex[size_t(j)] * ey[size_t(j)];
      // both intervals contain the exact value, so they must overlap
      REQUIRE(prod.less_than(exy[size_t(j)]) != std::optional<bool>(true));
      REQUIRE(exy[size_t(j)].less_than(prod) != std::optional<bool>(true));
    }
  }
}

TEST_CASE("trace agrees with sum of embeddings") {
  auto c = cubic7_field();
  for (int t = 0; t < 50; ++t) {
    auto x = random_element(c, 31, t);
    auto em = embed(x, 128);
    Interval s = em[0] + em[1] + em[2];
    REQUIRE(s.contains_q(x.trace()));
  }
}

TEST_CASE("orbit_matrix: sqrt2 basis and determinant") {
  auto f = sqrt2_field();
  auto beta = AlgebraicNumber::generator(f);
  auto one = AlgebraicNumber::from_rational(f, Q(1));
  auto g = orbit_matrix({one, beta}, 128);
  // rows: phi(1) = (1,1); phi(beta) = (-sqrt2, sqrt2); det^2 = 8
  REQUIRE(g.covol_sq == 8);
  REQUIRE(g.rows[0][0].contains_q(Q(1)));
  REQUIRE(g.rows[0][1].contains_q(Q(1)));
  REQUIRE(g.rows[1][0].is_definitely_negative());
  REQUIRE(g.rows[1][1].is_definitely_positive());

  REQUIRE_THROWS_AS(orbit_matrix({one, one + one}), NotABasis);  // (1, 2) dependent

  auto c = cubic7_field();
  auto b = AlgebraicNumber::generator(c);
  auto m = orbit_matrix({AlgebraicNumber::from_rational(c, Q(1)), b, b * b}, 128);
  REQUIRE(m.covol_sq == 49);  // disc(x^3+x^2-2x-1) = 49
}

TEST_CASE("rescale_basis") {
  auto f = sqrt2_field();
  auto beta = AlgebraicNumber::generator(f);
  auto one = AlgebraicNumber::from_rational(f, Q(1));
  auto scaled = rescale_basis({one, beta}, Z(2), {0, 3});
  REQUIRE(scaled[0] == one);
  REQUIRE(scaled[1] == beta * Q(8));

  auto unchanged = rescale_basis({one, beta}, Z(2), {0, 0});
  REQUIRE(unchanged[0] == one);
  REQUIRE(unchanged[1] == beta);

  REQUIRE_THROWS_AS(rescale_basis({one, beta}, Z(1), {0, 1}), BadScalar);
  REQUIRE_THROWS_AS(rescale_basis({one, beta}, Z(0), {0, 1}), BadScalar);
  REQUIRE_THROWS_AS(rescale_basis({one, beta}, Z(-1), {0, 1}), BadScalar);

  // negative exponents are exact rationals
  auto neg = rescale_basis({one, beta}, Z(2), {0, -2});
  REQUIRE(neg[1] == beta * Q(1, 4));
}

TEST_CASE("orbit matrix of rescaled basis is diagonal rescaling") {
  auto c = cubic7_field();
  auto b = AlgebraicNumber::generator(c);
  std::vector<AlgebraicNumber> basis{AlgebraicNumber::from_rational(c, Q(1)), b, b * b};
  auto g = orbit_matrix(basis, 96);
  auto h = orbit_matrix(rescale_basis(basis, Z(2), {0, 1, 2}), 96);
  for (int i = 0; i < 3; ++i) {
    Q f = qpow(Q(2), i);
    for (int j = 0; j < 3; ++j) {
      auto scaled = g.rows[size_t(i)][size_t(j)] * Interval::from_q(f, 96);
      REQUIRE(scaled.less_than(h.rows[size_t(i)][size_t(j)]) != std::optional<bool>(true));
      REQUIRE(h.rows[size_t(i)][size_t(j)].less_than(scaled) != std::optional<bool>(true));
    }
  }
}

TEST_CASE("root enclosures nest under refinement") {
  auto c = cubic7_field();
  auto wide = c->root(0, 40);
  auto tight = c->root(0, 200);
  auto tighter = c->root(0, 2000);
  REQUIRE(wide.contains(tight));
  REQUIRE(tight.contains(tighter));
}

TEST_CASE("fundamental units via continued fractions") {
  auto u2 = fundamental_unit_quadratic(Z(2));
  REQUIRE(u2.coeffs() == QPoly{Q(1), Q(1)});  // 1 + sqrt2
  REQUIRE(field_norm(u2) == -1);

  auto u3 = fundamental_unit_quadratic(Z(3));
  REQUIRE(u3.coeffs() == QPoly{Q(2), Q(1)});  // 2 + sqrt3
  REQUIRE(field_norm(u3) == 1);

  auto u5 = fundamental_unit_quadratic(Z(5));
  Q n5 = field_norm(u5);
  REQUIRE((n5 == 1 || n5 == -1));
  REQUIRE(u5.coeffs() == QPoly{Q(2), Q(1)});  // 2 + sqrt5 in Z[sqrt5]

  REQUIRE_THROWS_AS(fundamental_unit_quadratic(Z(12)), NotSquarefree);
  REQUIRE_THROWS_AS(fundamental_unit_quadratic(Z(1)), NotSquarefree);

  // larger: D = 61 has a famously large fundamental solution; norm must be +-1
  auto u61 = fundamental_unit_quadratic(Z(61));
  Q n61 = field_norm(u61);
  REQUIRE((n61 == 1 || n61 == -1));
}

TEST_CASE("sign_at resolves exactly") {
  auto f = sqrt2_field();
  auto beta = AlgebraicNumber::generator(f);
  // 1 - sqrt2 < 0 under identity (largest root), positive under the other
  auto x = AlgebraicNumber::from_rational(f, Q(1)) - beta;
  REQUIRE(x.sign_at(1) < 0);
  REQUIRE(x.sign_at(0) > 0);
  REQUIRE(AlgebraicNumber::from_rational(f, Q(0)).sign_at() == 0);
  // tiny but nonzero: 665857/470832 - sqrt2 (a convergent, ~ 1e-12 away)
  auto close = AlgebraicNumber::from_rational(f, Q(665857, 470832)) - beta;
  REQUIRE(close.sign_at(1) > 0);
}
