#pragma once

// Multi-index combinatorics, exact scalars and monomial bases.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hermpos {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown for malformed or inconsistent input data (non-Hermitian entries,
/// degree or dimension mismatches, bad rational strings).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponent vector of a monomial z^alpha.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : exps_(n, 0) {}
  explicit MultiIndex(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
  MultiIndex(std::initializer_list<unsigned> exps) : exps_(exps) {}

  static MultiIndex unit(std::size_t n, std::size_t j) {
    MultiIndex e(n);
    e.exps_.at(j) = 1;
    return e;
  }

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t j) const { return exps_[j]; }
  unsigned& operator[](std::size_t j) { return exps_[j]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  unsigned degree() const {
    unsigned s = 0;
    for (unsigned e : exps_) s += e;
    return s;
  }

  bool is_zero() const { return degree() == 0; }

  /// Componentwise alpha <= other.
  bool divides(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& other) const;

  /// Appends one exponent (used when homogenizing with a slack variable).
  MultiIndex extended(unsigned last) const {
    MultiIndex r = *this;
    r.exps_.push_back(last);
    return r;
  }

  /// Drops the last exponent.
  MultiIndex truncated() const {
    MultiIndex r = *this;
    r.exps_.pop_back();
    return r;
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.exps_ <=> b.exps_; }

 private:
  std::vector<unsigned> exps_;
};

std::ostream& operator<<(std::ostream& os, const MultiIndex& a);

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& a) const noexcept {
    std::size_t h = a.size();
    for (unsigned e : a.exponents()) h = h * 1000003u ^ (e + 0x9e3779b9u + (h << 6) + (h >> 2));
    return h;
  }
};

/// Graded order used for mixed-degree polynomials: total degree first, then
/// lexicographically decreasing exponents, so (2,0) precedes (1,1) precedes (0,2).
/// Returns true when a comes strictly before b.
bool graded_lex_before(const MultiIndex& a, const MultiIndex& b);

/// Functor form of graded_lex_before for ordered containers.
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return graded_lex_before(a, b); }
};

/// mu - alpha when every component stays non-negative.
std::optional<MultiIndex> sub_checked(const MultiIndex& mu, const MultiIndex& alpha);

Integer factorial(unsigned k);

/// prod_j alpha_j!
Integer multi_factorial(const MultiIndex& alpha);

/// d! / gamma!, requires |gamma| = d.
Integer multinomial(unsigned d, const MultiIndex& gamma);

Integer binomial(unsigned n, unsigned k);

/// (mu!/(mu-alpha)!, prod_j mu_j (mu_j - 1) ... (mu_j - alpha_j + 1)).
/// Both entries agree; the second is computed as a falling product.
std::pair<Integer, Integer> falling_factorial_identity_check(const MultiIndex& mu, const MultiIndex& alpha);

// ---------------------------------------------------------------------------
// Exact rationals

/// Parses "p/q" or "p"; the result is canonical with a positive denominator.
Rational parse_rational(const std::string& text);

/// Always "num/den" in lowest terms, den > 0 (integers print as "k/1").
std::string format_rational(const Rational& q);

/// Best rational approximation of x with denominator at most max_den
/// (continued fractions).
Rational rationalize(double x, long max_den);

/// Largest rational with denominator max_den that does not exceed x.
Rational rationalize_down(double x, long max_den);

/// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit real embedding
  GaussianRational(long r) : re(r) {}                 // NOLINT
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i_unit() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  GaussianRational conj() const { return {re, -im}; }
  /// |x|^2 as an exact rational.
  Rational norm2() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    if (sgn(o.im) != 0) im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    if (sgn(o.im) != 0) im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  /// Adds a*b into *this without temporaries for the common real cases.
  void add_product(const GaussianRational& a, const GaussianRational& b);
  void sub_product(const GaussianRational& a, const GaussianRational& b);
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

/// z^alpha for an exact point.
GaussianRational monomial_value(const std::vector<GaussianRational>& z, const MultiIndex& alpha);

// ---------------------------------------------------------------------------
// Monomial bases

/// All multi-indices of length n and total degree m in graded-lex order.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t n, unsigned m);

  std::size_t n() const { return n_; }
  unsigned degree() const { return m_; }
  std::size_t size() const { return indices_.size(); }
  const MultiIndex& operator[](std::size_t k) const { return indices_[k]; }
  const std::vector<MultiIndex>& indices() const { return indices_; }

  std::optional<std::size_t> find(const MultiIndex& alpha) const;
  /// Position of alpha; throws InputError when alpha is not in the basis.
  std::size_t index_of(const MultiIndex& alpha) const;

  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

 private:
  std::size_t n_;
  unsigned m_;
  std::vector<MultiIndex> indices_;
  std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> lookup_;
};

/// Shared, memoized basis. Thread safe.
std::shared_ptr<const MonomialBasis> basis(std::size_t n, unsigned m);

/// Convenience wrapper returning a fresh basis.
inline MonomialBasis enumerate_basis(std::size_t n, unsigned m) { return MonomialBasis(n, m); }

}  // namespace hermpos
