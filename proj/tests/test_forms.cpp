#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace hermpos;
using namespace testing_support;
using G = GaussianRational;

TEST_CASE("make_form fills conjugate partners") {
  const auto f = make_form(2, 1, {{{1, 0}, {0, 1}, G(1, 2)}});
  CHECK(f.at({1, 0}, {0, 1}) == G(1, 2));
  CHECK(f.at({0, 1}, {1, 0}) == G(1, -2));
  CHECK_FALSE(f.is_diagonal());

  // explicit consistent partner is fine
  CHECK_NOTHROW(make_form(2, 1, {{{1, 0}, {0, 1}, G(1, 2)}, {{0, 1}, {1, 0}, G(1, -2)}}));
}

TEST_CASE("make_form rejects inconsistent input") {
  CHECK_THROWS_AS(make_form(2, 1, {{{1, 0}, {0, 1}, G(1, 2)}, {{0, 1}, {1, 0}, G(1, 2)}}), InputError);
  CHECK_THROWS_AS(make_form(2, 1, {{{1, 0}, {1, 0}, G(1, 1)}}), InputError);
  CHECK_THROWS_AS(make_form(2, 1, {{{2, 0}, {1, 0}, G(1)}}), InputError);
  CHECK_THROWS_AS(make_form(2, 1, {{{1, 0, 0}, {1, 0, 0}, G(1)}}), InputError);
  CHECK_THROWS_AS(make_form(2, 1, {{{1, 0}, {1, 0}, G(1)}, {{1, 0}, {1, 0}, G(2)}}), InputError);
}

TEST_CASE("dense constructor checks Hermitian symmetry") {
  auto b = basis(2, 1);
  CHECK_THROWS_AS(BihomogeneousForm(b, {G(1), G(1), G(2), G(1)}), InputError);
  CHECK_THROWS_AS(BihomogeneousForm(b, {G(1), G(1)}), InputError);
  CHECK_NOTHROW(BihomogeneousForm(b, {G(1), G(0, 1), G(0, -1), G(1)}));
}

TEST_CASE("evaluation of p_1") {
  const auto f = p_c(1);
  CHECK(evaluate(f, {G(1), G(0)}) == 1);
  CHECK(evaluate(f, {G(1), G(1)}) == 1);
  CHECK(evaluate(f, {G(1, 1), G(1, -1)}) == 4 + 4 - 4);
  CHECK_THROWS_AS(evaluate(f, {G(1)}), InputError);
}

TEST_CASE("norm power form evaluates to ||z||^{2m}") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 3; ++n)
    for (unsigned m = 0; m <= 4; ++m) {
      const auto f = norm_power_form(n, m);
      CHECK(f.is_diagonal());
      for (int k = 0; k < 5; ++k) {
        const Point z = random_point(rng, n);
        CHECK(evaluate(f, z) == power(norm2(z), m));
      }
    }
}

TEST_CASE("sum, difference, scaling and product are pointwise") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_form(rng, 2, 2), b = random_form(rng, 2, 2), c = random_form(rng, 2, 1);
    const Point z = random_point(rng, 2);
    CHECK(evaluate(a + b, z) == evaluate(a, z) + evaluate(b, z));
    CHECK(evaluate(a - b, z) == evaluate(a, z) - evaluate(b, z));
    CHECK(evaluate(scaled(a, Rational(-3, 7)), z) == Rational(-3, 7) * evaluate(a, z));
    const auto ac = multiply(a, c);
    CHECK(ac.m() == 3);
    CHECK(evaluate(ac, z) == evaluate(a, z) * evaluate(c, z));
  }
  CHECK_THROWS_AS(p_c(1) + norm_power_form(2, 1), InputError);
}

TEST_CASE("Hermitian polynomials and homogenization") {
  // f = 3 + z1 + conj z1 + |z1|^2 |z2|^2
  HermitianPolynomial f(2, {{{0, 0}, {0, 0}, G(3)}, {{1, 0}, {0, 0}, G(1)}, {{1, 1}, {1, 1}, G(1)}});
  CHECK(f.degree() == 2);
  CHECK_FALSE(f.is_bihomogeneous());
  CHECK(f.coefficient({0, 0}, {1, 0}) == G(1));
  const Point z{G(1, 2), G(-1, 1)};
  CHECK(evaluate_poly(f, z) == 3 + 2 + Rational(5 * 2));

  const auto F = homogenize(f, 2);
  CHECK(F.n() == 3);
  Point zt = z;
  zt.push_back(G(1));
  CHECK(evaluate(F, zt) == evaluate_poly(f, z));

  std::mt19937_64 rng(3);
  for (int k = 0; k < 5; ++k) {
    const Point w = random_point(rng, 2);
    CHECK(evaluate_poly(times_norm_squared(f), w) == norm2(w) * evaluate_poly(f, w));
  }
  CHECK_THROWS_AS(homogenize(f, 1), InputError);
  CHECK_THROWS_AS(f.to_form(2), InputError);
}

TEST_CASE("forms convert to polynomials and back") {
  std::mt19937_64 rng(5);
  const auto a = random_form(rng, 3, 2);
  const auto p = HermitianPolynomial::from_form(a);
  CHECK(p.is_bihomogeneous());
  CHECK(p.to_form(2) == a);
}

TEST_CASE("holomorphic polynomials") {
  Polynomial a(2), b(2);
  a.add_term({1, 0}, G(1));
  a.add_term({0, 0}, G(2));
  b.add_term({0, 1}, G(0, 1));
  const Polynomial ab = a * b;
  CHECK(ab.coefficient({1, 1}) == G(0, 1));
  CHECK(ab.coefficient({0, 1}) == G(0, 2));
  CHECK(ab.degree() == 2);
  CHECK(ab.low_degree() == 1);
  CHECK(a.homogeneous_part(0) == Polynomial::constant(2, G(2)));
  const Point z{G(3), G(1, 1)};
  CHECK(ab.evaluate(z) == a.evaluate(z) * b.evaluate(z));

  Polynomial cancel = a - a;
  CHECK(cancel.is_zero());
}

TEST_CASE("division with remainder") {
  // (1 + z1/2) * (z1 - 3 z2) + (5 + z2^2)
  Polynomial den(2), quo(2), rem(2);
  den.add_term({0, 0}, G(1));
  den.add_term({1, 0}, G(Rational(1, 2)));
  quo.add_term({1, 0}, G(1));
  quo.add_term({0, 1}, G(-3));
  rem.add_term({0, 0}, G(5));
  rem.add_term({0, 2}, G(1));
  const Polynomial a = den * quo + rem;
  auto [q, r] = divide(a, den);
  CHECK(q * den + r == a);
  auto [q2, r2] = divide(den * quo, den);
  CHECK(r2.is_zero());
  CHECK(q2 == quo);
  CHECK_FALSE(divide(rem, den).second.is_zero());
}

TEST_CASE("polynomial maps: squared norms and direct sums") {
  HoloPolyMap g(2);
  Polynomial p(2), q(2);
  p.add_term({1, 0}, G(1));
  q.add_term({1, 1}, G(1, 1));
  q.add_term({0, 2}, G(2));
  g.push_back(Rational(1, 4), p);
  g.push_back(Rational(3), q);
  CHECK_THROWS_AS(g.push_back(Rational(0), p), InputError);
  CHECK(g.degree() == 2);
  CHECK_FALSE(g.is_homogeneous(2));

  std::mt19937_64 rng(9);
  const auto poly = g.squared_norm_poly();
  for (int k = 0; k < 5; ++k) {
    const Point z = random_point(rng, 2);
    const Rational expected = Rational(1, 4) * p.evaluate(z).norm2() + 3 * q.evaluate(z).norm2();
    CHECK(g.squared_norm(z) == expected);
    CHECK(evaluate_poly(poly, z) == expected);
  }

  HoloPolyMap h(2);
  h.push_back(Rational(3), q);
  const auto form = h.squared_norm_form(2);
  const Point z = random_point(rng, 2);
  CHECK(evaluate(form, z) == h.squared_norm(z));
  CHECK_THROWS_AS(g.squared_norm_form(2), InputError);

  const auto gh = direct_sum(g, h);
  CHECK(gh.size() == 3);
  CHECK(gh.squared_norm(z) == g.squared_norm(z) + h.squared_norm(z));
}

TEST_CASE("signature of small forms") {
  // |z1|^4 + |z2|^4: diag(1, 0, 1)
  const auto ex1 = make_form(2, 2, {{{2, 0}, {2, 0}, G(1)}, {{0, 2}, {0, 2}, G(1)}});
  CHECK(inertia(ex1) == InertiaTriple{2, 0, 1});
  CHECK_FALSE(is_positive_definite(ex1));

  // zero diagonal needs a 2x2 pivot: [[0, i], [-i, 0]] has inertia (1, 1, 0)
  const auto off = make_form(2, 1, {{{1, 0}, {0, 1}, G(0, 1)}});
  CHECK(inertia(off) == InertiaTriple{1, 1, 0});

  CHECK(inertia(BihomogeneousForm(3, 2)) == InertiaTriple{0, 0, 6});
  CHECK(is_positive_definite(norm_power_form(3, 3)));
  CHECK(inertia(p_c(3)) == InertiaTriple{2, 1, 0});
}

TEST_CASE("P/N decomposition reconstructs the form") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_form(rng, 2, 2);
    const auto pn = decompose_PN(f);
    const auto t = inertia(f);
    CHECK(pn.positive.size() == t.positive);
    CHECK(pn.negative.size() == t.negative);
    CHECK(pn.positive.is_homogeneous(2));
    auto rebuilt = BihomogeneousForm(2, 2);
    if (!pn.positive.empty()) rebuilt = rebuilt + pn.positive.squared_norm_form(2);
    if (!pn.negative.empty()) rebuilt = rebuilt - pn.negative.squared_norm_form(2);
    CHECK(rebuilt == f);
  }
}
