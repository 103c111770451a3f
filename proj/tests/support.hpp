#pragma once

#include "hermpos/maps.hpp"

#include <random>

namespace testing_support {

using namespace hermpos;

// |z|^4 + |w|^4 - c |zw|^2
inline BihomogeneousForm p_c(const Rational& c) {
  return make_form(2, 2, {{{2, 0}, {2, 0}, Rational(1)}, {{0, 2}, {0, 2}, Rational(1)}, {{1, 1}, {1, 1}, Rational(-c)}});
}

inline RealPolynomial polya_c(const Rational& c) {
  RealPolynomial p(2, 2);
  p.add_term({2, 0}, 1);
  p.add_term({0, 2}, 1);
  p.add_term({1, 1}, Rational(-c));
  return p;
}

// Small rational in [-k, k] with denominator up to 4.
inline Rational small_rational(std::mt19937_64& rng, int k = 3) {
  std::uniform_int_distribution<int> num(-4 * k, 4 * k), den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline BihomogeneousForm random_form(std::mt19937_64& rng, std::size_t n, unsigned m, bool complex_entries = true) {
  auto b = basis(n, m);
  const std::size_t s = b->size();
  std::vector<GaussianRational> c(s * s);
  std::bernoulli_distribution sparse(0.3);
  for (std::size_t i = 0; i < s; ++i) {
    c[i * s + i] = small_rational(rng);
    for (std::size_t j = i + 1; j < s; ++j) {
      if (sparse(rng)) continue;
      GaussianRational v(small_rational(rng), complex_entries ? small_rational(rng) : Rational(0));
      c[i * s + j] = v;
      c[j * s + i] = v.conj();
    }
  }
  return BihomogeneousForm(b, std::move(c));
}

inline Point random_point(std::mt19937_64& rng, std::size_t n) {
  Point z;
  for (std::size_t j = 0; j < n; ++j) z.emplace_back(small_rational(rng, 2), small_rational(rng, 2));
  return z;
}

inline Rational norm2(const Point& z) {
  Rational s = 0;
  for (const auto& v : z) s += v.norm2();
  return s;
}

inline Rational power(Rational x, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= x;
  return r;
}

// Exact rational points on the unit sphere of C^2, from Pythagorean triples.
inline std::vector<Point> rational_sphere_points_c2() {
  using G = GaussianRational;
  const Rational a(3, 5), b(4, 5), c(5, 13), d(12, 13);
  return {
      {G(1), G(0)},
      {G(0), G(1)},
      {G(a), G(b)},
      {G(0, a), G(b)},
      {G(-b), G(0, -a)},
      {G(c * a, c * b), G(d)},
      {G(c), G(d * a, -d * b)},
      {G(Rational(1, 2), Rational(1, 2)), G(Rational(1, 2), Rational(-1, 2))},
  };
}

// Dense complex matrix of a form, for floating-point oracles.
inline Eigen::MatrixXcd to_eigen(const BihomogeneousForm& f) {
  Eigen::MatrixXcd m(f.size(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) m(i, j) = {f(i, j).re.get_d(), f(i, j).im.get_d()};
  return m;
}

}  // namespace testing_support
