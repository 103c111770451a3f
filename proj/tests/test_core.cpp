#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermpos/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace hermpos;

namespace {

// Every exponent tuple in [0, m]^n with sum m, sorted descending lexicographically.
std::vector<std::vector<unsigned>> brute_force_basis(std::size_t n, unsigned m) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> e(n, 0);
  while (true) {
    unsigned s = 0;
    for (unsigned v : e) s += v;
    if (s == m) out.push_back(e);
    std::size_t j = 0;
    while (j < n && e[j] == m) e[j++] = 0;
    if (j == n) break;
    ++e[j];
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

TEST_CASE("basis order for two variables of degree two") {
  MonomialBasis b(2, 2);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == MultiIndex{2, 0});
  CHECK(b[1] == MultiIndex{1, 1});
  CHECK(b[2] == MultiIndex{0, 2});
  CHECK(b.index_of({0, 2}) == 2);
  CHECK_FALSE(b.find({1, 0}).has_value());
  CHECK_THROWS_AS(b.index_of({3, 0}), InputError);
}

TEST_CASE("basis matches brute-force enumeration") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned m = 0; m <= 5; ++m) {
      MonomialBasis b(n, m);
      const auto oracle = brute_force_basis(n, m);
      REQUIRE(b.size() == oracle.size());
      CHECK(Integer(b.size()) == binomial(n + m - 1, m));
      for (std::size_t k = 0; k < b.size(); ++k) CHECK(b[k].exponents() == oracle[k]);
    }
}

TEST_CASE("zero variables are rejected") { CHECK_THROWS_AS(MonomialBasis(0, 2), InputError); }

TEST_CASE("shared basis cache returns the same object") {
  auto a = basis(3, 4);
  auto b = basis(3, 4);
  CHECK(a.get() == b.get());
  CHECK(a->size() == 15);
}

TEST_CASE("graded order puts degree first") {
  CHECK(graded_lex_before({1, 0}, {2, 0}));
  CHECK(graded_lex_before({2, 0}, {1, 1}));
  CHECK(graded_lex_before({1, 1}, {0, 2}));
  CHECK_FALSE(graded_lex_before({0, 2}, {0, 2}));
}

TEST_CASE("multinomials sum to n^d") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned d = 0; d <= 6; ++d) {
      Integer total = 0;
      for (const auto& g : MonomialBasis(n, d)) total += multinomial(d, g);
      Integer expected = 1;
      for (unsigned k = 0; k < d; ++k) expected *= static_cast<unsigned long>(n);
      CHECK(total == expected);
    }
  CHECK(multinomial(4, {2, 1, 1}) == 12);
  CHECK_THROWS_AS(multinomial(3, {1, 1}), InputError);
}

TEST_CASE("falling factorial identity") {
  const MultiIndex mu{5, 3, 2};
  for (const auto& alpha : MonomialBasis(3, 4)) {
    if (!alpha.divides(mu)) continue;
    auto [lhs, rhs] = falling_factorial_identity_check(mu, alpha);
    CHECK(lhs == rhs);
    CHECK(lhs == multi_factorial(mu) / multi_factorial(*sub_checked(mu, alpha)));
  }
  CHECK_FALSE(sub_checked({1, 0}, {0, 1}).has_value());
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(parse_rational("2/-4") == Rational(-1, 2));
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  CHECK(format_rational(Rational(-5)) == "-5/1");
  CHECK(format_rational(Rational(0)) == "0/1");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
}

TEST_CASE("continued-fraction rationalization") {
  CHECK(rationalize(std::numbers::pi, 1000) == Rational(355, 113));
  CHECK(rationalize(0.3333333333, 10) == Rational(1, 3));
  CHECK(rationalize(-0.75, 100) == Rational(-3, 4));
  CHECK(rationalize(2.0, 1) == Rational(2));
  const Rational down = rationalize_down(1.0 / 3.0, 1000000);
  CHECK(down <= Rational(1, 3));
  CHECK(Rational(1, 3) - down < Rational(1, 1000000));
  CHECK(rationalize_down(0.5, 10) == Rational(1, 2));
}

TEST_CASE("Gaussian rational arithmetic") {
  const GaussianRational a(1, 2), b(3, -1);
  CHECK(a * b == GaussianRational(5, 5));
  CHECK((a * b) / b == a);
  CHECK(a.conj() == GaussianRational(1, -2));
  CHECK(a.norm2() == 5);
  CHECK(GaussianRational::i_unit() * GaussianRational::i_unit() == GaussianRational(-1));
  GaussianRational acc(1);
  acc.add_product(a, b);
  CHECK(acc == GaussianRational(6, 5));
  acc.sub_product(a, b);
  CHECK(acc == GaussianRational(1));
  CHECK_THROWS_AS(a / GaussianRational(), std::domain_error);
}

TEST_CASE("monomial values") {
  const std::vector<GaussianRational> z{GaussianRational(0, 1), GaussianRational(2)};
  CHECK(monomial_value(z, {2, 3}) == GaussianRational(-8));
  CHECK(monomial_value(z, {0, 0}) == GaussianRational(1));
  CHECK_THROWS_AS(monomial_value(z, {1}), InputError);
}
