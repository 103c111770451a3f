#pragma once

// Data-parallel exact kernels (OpenMP). Each has a serial reference in
// hermpos/reference.hpp that uses a different loop structure; the test suite
// checks both agree entry for entry.

#include "hermpos/core.hpp"

#include <span>

namespace hermpos::kernels {

/// Matrix of (sum_j |z_j|^2) * f, gathered row by row over the degree m+1 basis.
std::vector<GaussianRational> multiply_once(const MonomialBasis& src, const MonomialBasis& dst,
                                            std::span<const GaussianRational> c);

/// Matrix of ||z||^{2d} * f by the closed-form convolution
/// E[mu,nu] = sum_{|gamma|=d, gamma<=mu, gamma<=nu} (d!/gamma!) C[mu-gamma, nu-gamma].
std::vector<GaussianRational> norm_power(const MonomialBasis& src, const MonomialBasis& dst, unsigned d,
                                         std::span<const GaussianRational> c);

/// Coefficient matrix of the product of two forms.
std::vector<GaussianRational> product(const MonomialBasis& a_basis, std::span<const GaussianRational> a,
                                      const MonomialBasis& b_basis, std::span<const GaussianRational> b,
                                      const MonomialBasis& dst);

/// One rank-k congruence term weight * v v^*.
struct CongruenceTerm {
  Rational weight;
  std::vector<GaussianRational> vec;
};

enum class PivotRule {
  /// Diagonal pivots in basis order; stops at the first non-positive pivot.
  none,
  /// Any non-zero diagonal pivot, else a 2x2 block on a non-zero off-diagonal.
  symmetric,
};

struct EliminationResult {
  /// For PivotRule::none: every pivot was positive.
  bool positive_definite = false;
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  /// C = sum weight_k v_k v_k^*, only filled when recording was requested.
  std::vector<CongruenceTerm> terms;
};

/// Exact Hermitian elimination over Q(i). The Schur-complement update of each
/// step runs in parallel over rows.
EliminationResult eliminate(std::vector<GaussianRational> work, std::size_t size, PivotRule rule, bool record);

}  // namespace hermpos::kernels
