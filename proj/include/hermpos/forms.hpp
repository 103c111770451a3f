#pragma once

// Hermitian bihomogeneous forms, inhomogeneous Hermitian polynomials,
// holomorphic polynomial maps, and exact signature computations.

#include "hermpos/core.hpp"

#include <complex>
#include <map>
#include <span>

namespace hermpos {

using Point = std::vector<GaussianRational>;
using ComplexPoint = std::vector<std::complex<double>>;

struct FormEntry {
  MultiIndex alpha;
  MultiIndex beta;
  GaussianRational value;
};

/// Hermitian form f(z, conj z) = sum_{|alpha|=|beta|=m} C[alpha,beta] z^alpha conj(z)^beta,
/// stored as a dense matrix over MonomialBasis(n, m).
class BihomogeneousForm {
 public:
  /// Zero form.
  BihomogeneousForm(std::size_t n, unsigned m);
  /// Takes a dense row-major matrix; throws InputError unless it is Hermitian.
  BihomogeneousForm(std::shared_ptr<const MonomialBasis> basis, std::vector<GaussianRational> matrix);

  std::size_t n() const { return basis_->n(); }
  unsigned m() const { return basis_->degree(); }
  std::size_t size() const { return basis_->size(); }
  const MonomialBasis& basis() const { return *basis_; }
  std::shared_ptr<const MonomialBasis> basis_ptr() const { return basis_; }

  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return data_[i * size() + j]; }
  /// Coefficient of z^alpha conj(z)^beta.
  const GaussianRational& at(const MultiIndex& alpha, const MultiIndex& beta) const;
  std::span<const GaussianRational> matrix() const { return data_; }

  bool is_diagonal() const;
  bool is_zero() const;

  friend bool operator==(const BihomogeneousForm& a, const BihomogeneousForm& b) {
    return a.n() == b.n() && a.m() == b.m() && a.data_ == b.data_;
  }

 private:
  std::shared_ptr<const MonomialBasis> basis_;
  std::vector<GaussianRational> data_;
};

/// Builds a form from sparse entries. A single (alpha, beta) entry implies its
/// conjugate partner; explicit partners must agree.
BihomogeneousForm make_form(std::size_t n, unsigned m, const std::vector<FormEntry>& entries);

/// The form of ||z||^{2m}: diagonal with entries m!/alpha!.
BihomogeneousForm norm_power_form(std::size_t n, unsigned m);

Rational evaluate(const BihomogeneousForm& form, const Point& z);

BihomogeneousForm operator+(const BihomogeneousForm& a, const BihomogeneousForm& b);
BihomogeneousForm operator-(const BihomogeneousForm& a, const BihomogeneousForm& b);
BihomogeneousForm scaled(const BihomogeneousForm& a, const Rational& s);
/// Coefficient matrix of the pointwise product of two forms.
BihomogeneousForm multiply(const BihomogeneousForm& a, const BihomogeneousForm& b);

// ---------------------------------------------------------------------------

using CoefficientKey = std::pair<MultiIndex, MultiIndex>;

/// Real-valued polynomial sum c[alpha,beta] z^alpha conj(z)^beta with |alpha|, |beta| <= m,
/// not necessarily homogeneous. Zero coefficients are never stored.
class HermitianPolynomial {
 public:
  explicit HermitianPolynomial(std::size_t n) : n_(n) {
    if (n == 0) throw InputError("polynomial dimension must be >= 1");
  }
  /// Same partner-filling rules as make_form.
  HermitianPolynomial(std::size_t n, const std::vector<FormEntry>& entries);
  static HermitianPolynomial from_form(const BihomogeneousForm& form);

  std::size_t n() const { return n_; }
  /// Largest |alpha| among the stored coefficients (0 for the zero polynomial).
  unsigned degree() const;
  bool is_bihomogeneous() const;
  const std::map<CoefficientKey, GaussianRational>& terms() const { return terms_; }
  GaussianRational coefficient(const MultiIndex& alpha, const MultiIndex& beta) const;

  /// Exact matrix when every term has |alpha| = |beta| = m.
  BihomogeneousForm to_form(unsigned m) const;

  friend bool operator==(const HermitianPolynomial&, const HermitianPolynomial&) = default;

  HermitianPolynomial& operator+=(const HermitianPolynomial& o);
  HermitianPolynomial& operator-=(const HermitianPolynomial& o);
  friend HermitianPolynomial operator+(HermitianPolynomial a, const HermitianPolynomial& b) { return a += b; }
  friend HermitianPolynomial operator-(HermitianPolynomial a, const HermitianPolynomial& b) { return a -= b; }

  /// Adds value to (alpha, beta) only; callers keep the Hermitian pairing.
  void add_raw(const MultiIndex& alpha, const MultiIndex& beta, const GaussianRational& value);

 private:
  std::size_t n_;
  std::map<CoefficientKey, GaussianRational> terms_;
};

inline HermitianPolynomial make_hermitian_poly(std::size_t n, const std::vector<FormEntry>& entries) {
  return HermitianPolynomial(n, entries);
}

Rational evaluate_poly(const HermitianPolynomial& f, const Point& z);

/// ||z||^2 * f.
HermitianPolynomial times_norm_squared(const HermitianPolynomial& f);

/// Homogenizes f of degree <= m with a slack variable appended last:
/// F(z, t) = sum c[alpha,beta] z^alpha t^{m-|alpha|} conj(z)^beta conj(t)^{m-|beta|}.
BihomogeneousForm homogenize(const HermitianPolynomial& f, unsigned m);

// ---------------------------------------------------------------------------

/// Sparse holomorphic polynomial sum c[alpha] z^alpha.
class Polynomial {
 public:
  explicit Polynomial(std::size_t n) : n_(n) {}
  Polynomial(std::size_t n, std::map<MultiIndex, GaussianRational> terms);

  static Polynomial constant(std::size_t n, GaussianRational c);

  std::size_t n() const { return n_; }
  const std::map<MultiIndex, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest total degree (0 for the zero polynomial).
  unsigned degree() const;
  /// Lowest total degree of a non-zero term (0 for the zero polynomial).
  unsigned low_degree() const;
  GaussianRational coefficient(const MultiIndex& alpha) const;

  void add_term(const MultiIndex& alpha, const GaussianRational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const GaussianRational& s, const Polynomial& p);

  /// Homogeneous part of degree k.
  Polynomial homogeneous_part(unsigned k) const;

  GaussianRational evaluate(const Point& z) const;
  std::complex<double> evaluate(const ComplexPoint& z) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t n_;
  std::map<MultiIndex, GaussianRational> terms_;
};

/// Exact multivariate division a = q*b + r with respect to graded-lex order.
/// A single divisor is its own Groebner basis, so r == 0 iff b divides a.
std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b);

/// Vector-valued holomorphic polynomial. Component k is sqrt(scale_k) * poly_k,
/// so ||g||^2 = sum_k scale_k |poly_k|^2 stays exact over the rationals.
class HoloPolyMap {
 public:
  struct Component {
    Rational scale;
    Polynomial poly;

    friend bool operator==(const Component&, const Component&) = default;
  };

  explicit HoloPolyMap(std::size_t n) : n_(n) {
    if (n == 0) throw InputError("map dimension must be >= 1");
  }

  std::size_t n() const { return n_; }
  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }
  const std::vector<Component>& components() const { return components_; }
  const Component& operator[](std::size_t k) const { return components_[k]; }

  /// Appends a component; scale must be positive and the polynomial must
  /// live on the same dimension.
  void push_back(Rational scale, Polynomial poly);

  unsigned degree() const;
  /// True when every non-zero coefficient has total degree m.
  bool is_homogeneous(unsigned m) const;

  /// Exact ||g(z)||^2.
  Rational squared_norm(const Point& z) const;
  double squared_norm(const ComplexPoint& z) const;
  /// Floating values sqrt(scale_k) * poly_k(z).
  ComplexPoint evaluate(const ComplexPoint& z) const;

  /// Coefficients of ||g||^2 as a Hermitian polynomial.
  HermitianPolynomial squared_norm_poly() const;
  /// Coefficient matrix of ||g||^2 over MonomialBasis(n, m); requires homogeneity.
  BihomogeneousForm squared_norm_form(unsigned m) const;

  friend bool operator==(const HoloPolyMap&, const HoloPolyMap&) = default;

 private:
  std::size_t n_;
  std::vector<Component> components_;
};

/// g followed by h.
HoloPolyMap direct_sum(const HoloPolyMap& g, const HoloPolyMap& h);

// ---------------------------------------------------------------------------
// Exact signature and decompositions

struct InertiaTriple {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

std::ostream& operator<<(std::ostream& os, const InertiaTriple& t);

/// Signature by exact congruence reduction with 1x1 and 2x2 pivots.
InertiaTriple inertia(const BihomogeneousForm& form);

/// Exact decision via LDL elimination without pivoting.
bool is_positive_definite(const BihomogeneousForm& form);

struct PNDecomposition {
  HoloPolyMap positive;
  HoloPolyMap negative;
};

/// f = ||P||^2 - ||N||^2 with P, N homogeneous of degree m and k+, k- components.
PNDecomposition decompose_PN(const BihomogeneousForm& form);

}  // namespace hermpos
