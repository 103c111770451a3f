#pragma once

// Floating-point sampling and projected-gradient search on the unit sphere.
// Used as a disprover and for numeric verification only; nothing here feeds
// an exact certificate.

#include "hermpos/forms.hpp"

#include <cstdint>

namespace hermpos {

/// f(z, conj z) compiled to double precision with its Wirtinger gradient.
class FloatHermitian {
 public:
  explicit FloatHermitian(const HermitianPolynomial& f);
  explicit FloatHermitian(const BihomogeneousForm& f) : FloatHermitian(HermitianPolynomial::from_form(f)) {}

  struct FloatEntry {
    MultiIndex alpha;
    MultiIndex beta;
    std::complex<double> coeff;
  };
  /// Floating coefficients; the caller keeps them Hermitian.
  FloatHermitian(std::size_t n, const std::vector<FloatEntry>& entries);

  std::size_t n() const { return n_; }
  double value(const ComplexPoint& z) const;
  /// Real-space gradient packed as complex numbers: 2 * df/d(conj z_j).
  ComplexPoint gradient(const ComplexPoint& z) const;

 private:
  struct Term {
    std::size_t alpha;
    std::size_t beta;
    std::complex<double> coeff;
  };
  std::complex<double> monomial(const ComplexPoint& z, std::size_t k) const;

  std::size_t n_;
  std::vector<MultiIndex> monomials_;
  std::vector<Term> terms_;
};

/// Uniform point on the unit sphere of C^n from the stream (seed, index).
/// Independent of evaluation order, so sampling is schedule independent.
ComplexPoint sphere_sample(std::size_t n, std::uint64_t seed, std::uint64_t index);

struct SphereSearchOptions {
  std::size_t samples = 10000;
  std::size_t refine_iters = 200;
  std::uint64_t seed = 0;
  /// Number of best samples refined by projected gradient descent.
  std::size_t refine_candidates = 8;
};

struct SphereMinimum {
  double value = 0;
  ComplexPoint witness;
};

/// Upper bound on min f over the unit sphere: sampled, then the best
/// candidates refined by projected gradient descent with backtracking.
SphereMinimum min_sphere_estimate(const FloatHermitian& f, const SphereSearchOptions& options = {});
SphereMinimum min_sphere_estimate(const HermitianPolynomial& f, const SphereSearchOptions& options = {});
SphereMinimum min_sphere_estimate(const BihomogeneousForm& f, const SphereSearchOptions& options = {});

/// Evaluates f at every sample in parallel; the serial path is the reference.
std::vector<double> evaluate_samples(const FloatHermitian& f, std::uint64_t seed, std::size_t count, bool parallel);

double norm(const ComplexPoint& z);

}  // namespace hermpos
