#pragma once

// Proper polynomial and rational maps between balls built from
// stabilization certificates.

#include "hermpos/stabilization.hpp"

#include <stdexcept>

namespace hermpos {

/// Components h_j g_k ordered lexicographically by (j, k).
HoloPolyMap tensor(const HoloPolyMap& h, const HoloPolyMap& g);

/// Components sqrt(d!/alpha!) z^alpha, |alpha| = d; ||H_d(z)||^2 = ||z||^{2d}.
HoloPolyMap H_map(std::size_t n, unsigned d);

/// The completion could not be built. Carries a sphere witness when the input
/// itself violates the hypothesis (exit code 2), or nothing when stabilization
/// ran out of degrees (exit code 3).
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& what, std::optional<SphereMinimum> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::optional<SphereMinimum>& witness() const { return witness_; }
  bool is_disproof() const { return witness_.has_value(); }

 private:
  std::optional<SphereMinimum> witness_;
};

struct HomogeneousCompletion {
  unsigned d = 0;
  /// g with ||g||^2 = ||z||^{2d} (||z||^{2m} - ||p||^2).
  HoloPolyMap g;
  /// p + g; ||.||^2 = 1 on the unit sphere.
  HoloPolyMap sphere_map;
  /// (H_d tensor p) + g; ||.||^2 = ||z||^{2(m+d)} on all of C^n.
  HoloPolyMap homogeneous_map;
};

/// Completes a homogeneous p of degree m with ||p|| < 1 on the sphere.
HomogeneousCompletion complete_homogeneous(const HoloPolyMap& p, unsigned d_max, const DisproverConfig& config = {});

struct SquaredNormRepresentation {
  /// ||g(z)||^2 = f(z) on the unit sphere.
  HoloPolyMap g;
  /// Constant added with (||z||^2 - |t|^2)^m before stabilizing.
  Rational c;
  unsigned d = 0;
  /// Even degree used for the homogenization.
  unsigned m = 0;
};

/// Writes a polynomial positive on the sphere as a squared norm there: even degree,
/// homogenize with a slack t, add C (||z||^2 - |t|^2)^m, stabilize, set t = 1 and
/// divide the scales by 2^d.
SquaredNormRepresentation squared_norm_representation(const HermitianPolynomial& f, unsigned d_max,
                                                      const DisproverConfig& config = {});

/// p + g with ||p + g||^2 = 1 on the sphere, for p with sup-norm < 1 on the closed ball.
HoloPolyMap complete_general(const HoloPolyMap& p, unsigned d_max, const DisproverConfig& config = {});

// ---------------------------------------------------------------------------

struct RationalMap {
  HoloPolyMap numerator;
  Polynomial denominator;
  bool lowest_terms = false;

  /// Squared norm of numerator / denominator at a point.
  double squared_norm(const ComplexPoint& z) const;
};

/// phi_a(w) = (a - P_a w - s Q_a w) / (1 - <w, a>), s = sqrt(1 - ||a||^2).
class BallAutomorphism {
 public:
  explicit BallAutomorphism(ComplexPoint a);

  const ComplexPoint& a() const { return a_; }
  ComplexPoint apply(const ComplexPoint& w) const;

 private:
  ComplexPoint a_;
  double a2_;
  double s_;
};

inline ComplexPoint automorphism_apply(const ComplexPoint& a, const ComplexPoint& w) {
  return BallAutomorphism(a).apply(w);
}

/// phi_a composed with F, exactly, for a = a_k e_k along one coordinate axis
/// (the scale field carries s = sqrt(1 - |a_k|^2)). Other a are rejected.
RationalMap automorphism_compose(const Point& a, const HoloPolyMap& f);

struct DenominatorResult {
  RationalMap map;
  Rational epsilon;
  /// Estimated sup of |q| on the sphere.
  double sup_estimate = 0;
};

/// Proper rational map with denominator 1 + q for q(0) = 0, |q| < 1 on the ball.
DenominatorResult denominator_map(const Polynomial& q, unsigned d_max, const DisproverConfig& config = {});

/// True iff some numerator component leaves a non-zero remainder on division by the denominator.
bool lowest_terms_check(const RationalMap& map);

// ---------------------------------------------------------------------------

struct Equivalence5Certificate {
  bool fit_ok = false;
  double fit_residual = 0;
  Eigen::MatrixXcd L;
  bool psd_ok = false;
  double min_eigenvalue = 0;
  bool variety_ok = false;
  double variety_min = 0;

  bool ok() const { return fit_ok && psd_ok && variety_ok; }
};

/// Floating-point check of H_d (x) N = L (H_d (x) P) with I - L^*L positive
/// semidefinite and V(sqrt(I - L^*L)(H_d (x) P)) = {0}.
Equivalence5Certificate equivalence5_certificate(const HoloPolyMap& P, const HoloPolyMap& N, unsigned d,
                                                 const SphereSearchOptions& search = {});

// ---------------------------------------------------------------------------

struct ProperReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double max_deviation = 0;
  bool pass = false;
};

ProperReport verify_proper(const HoloPolyMap& map, std::size_t samples, double tol, std::uint64_t seed);
ProperReport verify_proper(const RationalMap& map, std::size_t samples, double tol, std::uint64_t seed);

struct ExpansionRelations {
  /// max over samples of |sum_k ||F_k||^2 - ||z||^{2D}|.
  double constant_residual = 0;
  /// Entry s - 1 holds max |sum_l <F_{l+s}, F_l>| for s = 1..D.
  std::vector<double> fourier_residuals;

  double max_residual() const;
};

/// Residuals of the homogeneous-expansion relations of a proper map at sphere samples,
/// with each part tensored by H_{D-k} (D the map degree).
ExpansionRelations homogeneous_expansion_relations(const HoloPolyMap& map, std::size_t samples, std::uint64_t seed);

}  // namespace hermpos
