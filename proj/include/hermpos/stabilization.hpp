#pragma once

// Stabilization of Hermitian forms: multiplying by powers of ||z||^2 until the
// coefficient matrix is positive definite, factoring the result as a squared
// norm, the diagonal (Polya) specialization, and a sampling disprover.

#include "hermpos/forms.hpp"
#include "hermpos/sphere.hpp"

#include <Eigen/Dense>

#include <variant>

namespace hermpos {

/// Matrix of (sum_j |z_j|^2) * f.
BihomogeneousForm multiply_once(const BihomogeneousForm& form);

/// Matrix of ||z||^{2d} * f by the closed-form multinomial convolution.
BihomogeneousForm multiply_by_norm_power(const BihomogeneousForm& form, unsigned d);

/// g with ||g||^2 = form, one component per basis monomial, from the
/// congruence E = L D L^*. Throws InputError unless the form is positive definite.
HoloPolyMap holomorphic_factor(const BihomogeneousForm& form);

struct DisproverConfig {
  SphereSearchOptions search;
  /// Sampled values below -threshold count as negative evidence.
  double threshold = 1e-9;
  /// Also accept witnesses where f vanishes (|value| <= threshold, exact value 0).
  bool allow_zero = false;
};

struct StabilizationCertificate {
  unsigned d_min = 0;
  BihomogeneousForm stabilized;
  HoloPolyMap factor;
  /// Every d < d_min was checked exactly and found not positive definite.
  bool minimality_checked = false;
};

struct NotStabilized {
  unsigned d_max = 0;
  /// Best sampled value of f on the sphere (inconclusive evidence).
  double sphere_estimate = 0;
};

struct NegativeWitness {
  ComplexPoint point;
  double value = 0;
  /// A rational point on the same complex line, and f evaluated there exactly.
  Point exact_point;
  Rational exact_value;
};

using StabilizationResult = std::variant<StabilizationCertificate, NotStabilized, NegativeWitness>;

/// Searches d = 0, 1, ..., d_max for a positive-definite matrix of ||z||^{2d} f.
/// Falls back to the sphere disprover when none is found.
StabilizationResult stabilize(const BihomogeneousForm& form, unsigned d_max, const DisproverConfig& config = {});

/// Runs the sphere search and, when the sampled value qualifies, confirms the
/// sign exactly at a rationalized point. Requires a homogeneous form.
std::optional<NegativeWitness> find_negative_witness(const BihomogeneousForm& form, const DisproverConfig& config,
                                                     double* estimate = nullptr);

// ---------------------------------------------------------------------------
// Analysis matrices (floating point, reporting only)

/// A[mu,nu] = sum_beta c[beta+mu-nu, beta] z^{beta+mu-nu} conj(z)^beta, mu, nu of degree index_degree.
Eigen::MatrixXcd proposition1_matrix(const BihomogeneousForm& form, const ComplexPoint& z, unsigned index_degree);

/// L[mu,nu] = sum_{alpha-beta = mu-nu} c[alpha,beta] (mu/|mu|)^alpha (nu/|nu|)^beta, |mu| = |nu| = N.
Eigen::MatrixXcd corollary1_matrix(const BihomogeneousForm& form, unsigned big_n);

/// sum_{alpha-beta = mu-nu} c[alpha,beta] (nu/|nu|)^{alpha+beta}: the torus matrix evaluated at
/// index-dependent points sqrt(nu/|nu|). Not Hermitian in general.
Eigen::MatrixXcd corollary1_shifted_matrix(const BihomogeneousForm& form, unsigned big_n);

/// Smallest eigenvalue of the Hermitian part of m.
double min_eigenvalue(const Eigen::MatrixXcd& m);

// ---------------------------------------------------------------------------
// Diagonal forms and Polya's theorem

/// Real homogeneous polynomial sum c[alpha] x^alpha with rational coefficients.
class RealPolynomial {
 public:
  RealPolynomial(std::size_t n, unsigned m) : n_(n), m_(m) {
    if (n == 0) throw InputError("polynomial dimension must be >= 1");
  }
  RealPolynomial(std::size_t n, unsigned m, const std::map<MultiIndex, Rational>& terms);

  std::size_t n() const { return n_; }
  unsigned degree() const { return m_; }
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }
  Rational coefficient(const MultiIndex& alpha) const;
  void add_term(const MultiIndex& alpha, const Rational& c);

  Rational evaluate(const std::vector<Rational>& x) const;
  double evaluate(const std::vector<double>& x) const;

  /// (sum_j x_j) * p, by direct multiplication.
  RealPolynomial times_linear_sum() const;

  friend bool operator==(const RealPolynomial&, const RealPolynomial&) = default;

 private:
  std::size_t n_;
  unsigned m_;
  std::map<MultiIndex, Rational> terms_;
};

/// Coefficients of (sum_j x_j)^d p(x) over every monomial of degree m+d, in graded-lex
/// order, from d! sum_alpha c_alpha / (mu-alpha)!.
std::vector<std::pair<MultiIndex, Rational>> polya_coefficients(const RealPolynomial& p, unsigned d);

struct PolyaCertificate {
  unsigned d_min = 0;
  std::vector<std::pair<MultiIndex, Rational>> coefficients;
};

struct SimplexWitness {
  std::vector<double> point;
  double value = 0;
  std::vector<Rational> exact_point;
  Rational exact_value;
};

using PolyaResult = std::variant<PolyaCertificate, NotStabilized, SimplexWitness>;

PolyaResult polya_stabilize(const RealPolynomial& p, unsigned d_max, const DisproverConfig& config = {});

/// x_j = |z_j|^2 correspondence. Throws InputError on a non-diagonal form.
RealPolynomial to_real_polynomial(const BihomogeneousForm& form);
BihomogeneousForm to_diagonal_form(const RealPolynomial& p);

}  // namespace hermpos
