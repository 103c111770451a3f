#include "hermpos/maps.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

namespace hermpos {

HoloPolyMap tensor(const HoloPolyMap& h, const HoloPolyMap& g) {
  if (h.n() != g.n()) throw InputError("tensor product of maps on different dimensions");
  HoloPolyMap out(h.n());
  for (const auto& a : h.components())
    for (const auto& b : g.components()) out.push_back(a.scale * b.scale, a.poly * b.poly);
  return out;
}

HoloPolyMap H_map(std::size_t n, unsigned d) {
  HoloPolyMap out(n);
  for (const MultiIndex& alpha : *basis(n, d)) {
    Polynomial mono(n);
    mono.add_term(alpha, GaussianRational(1));
    out.push_back(Rational(multinomial(d, alpha)), std::move(mono));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void fail_from(const StabilizationResult& result, const std::string& context) {
  if (const auto* w = std::get_if<NegativeWitness>(&result))
    throw ConstructionError(context + ": form is not positive on the sphere", SphereMinimum{w->value, w->point});
  const auto& ns = std::get<NotStabilized>(result);
  throw ConstructionError(context + ": no positive-definite stabilization up to d_max=" + std::to_string(ns.d_max),
                          std::nullopt);
}

}  // namespace

HomogeneousCompletion complete_homogeneous(const HoloPolyMap& p, unsigned d_max, const DisproverConfig& config) {
  const unsigned m = p.degree();
  if (!p.is_homogeneous(m)) throw InputError("complete_homogeneous: map is not homogeneous");
  const BihomogeneousForm f = norm_power_form(p.n(), m) - p.squared_norm_form(m);

  const SphereMinimum est = min_sphere_estimate(f, config.search);
  if (est.value <= 0) throw ConstructionError("complete_homogeneous: ||p|| >= 1 somewhere on the sphere", est);

  StabilizationResult result = stabilize(f, d_max, config);
  auto* cert = std::get_if<StabilizationCertificate>(&result);
  if (!cert) fail_from(result, "complete_homogeneous");

  HomogeneousCompletion out{cert->d_min, cert->factor, direct_sum(p, cert->factor),
                            direct_sum(tensor(H_map(p.n(), cert->d_min), p), cert->factor)};
  return out;
}

SquaredNormRepresentation squared_norm_representation(const HermitianPolynomial& f, unsigned d_max,
                                                      const DisproverConfig& config) {
  const SphereMinimum est = min_sphere_estimate(f, config.search);
  if (est.value <= 0) throw ConstructionError("squared_norm_representation: f is not positive on the sphere", est);

  const std::size_t n = f.n();
  HermitianPolynomial even = f;
  unsigned m = f.degree();
  if (m % 2 == 1) {
    even = times_norm_squared(f);
    ++m;
  }

  if (m == 0) {
    HoloPolyMap g(n);
    g.push_back(f.coefficient(MultiIndex(n), MultiIndex(n)).re, Polynomial::constant(n, GaussianRational(1)));
    return {std::move(g), Rational(0), 0, 0};
  }

  const BihomogeneousForm big_f = homogenize(even, m);

  // (||z||^2 - |t|^2)^m with t the last variable.
  std::vector<FormEntry> entries;
  for (std::size_t j = 0; j <= n; ++j) {
    const MultiIndex e = MultiIndex::unit(n + 1, j);
    entries.push_back({e, e, GaussianRational(j == n ? -1 : 1)});
  }
  const BihomogeneousForm base = make_form(n + 1, 1, entries);
  BihomogeneousForm slack = base;
  for (unsigned k = 1; k < m; ++k) slack = multiply(slack, base);

  // On ||z|| = |t| the added term vanishes and F equals 2^{-m} f, so the
  // minimum over the sphere of C^{n+1} cannot exceed 2^{-m} min f.
  const double target = std::ldexp(est.value, -static_cast<int>(m)) / 2;
  Rational c = 1;
  std::optional<BihomogeneousForm> shifted;
  for (int attempt = 0; attempt < 64; ++attempt, c *= 2) {
    BihomogeneousForm candidate = big_f + scaled(slack, c);
    if (min_sphere_estimate(candidate, config.search).value >= target) {
      shifted = std::move(candidate);
      break;
    }
  }
  if (!shifted)
    throw ConstructionError("squared_norm_representation: no constant C made the homogenized form positive",
                            std::nullopt);

  StabilizationResult result = stabilize(*shifted, d_max, config);
  auto* cert = std::get_if<StabilizationCertificate>(&result);
  if (!cert) fail_from(result, "squared_norm_representation");

  // Set t = 1; on the sphere ||g(z, 1)||^2 = 2^d f(z).
  Rational divisor = 1;
  mpz_mul_2exp(divisor.get_num_mpz_t(), divisor.get_num_mpz_t(), cert->d_min);
  HoloPolyMap g(n);
  for (const auto& comp : cert->factor.components()) {
    Polynomial poly(n);
    for (const auto& [alpha, coeff] : comp.poly.terms()) poly.add_term(alpha.truncated(), coeff);
    if (!poly.is_zero()) g.push_back(comp.scale / divisor, std::move(poly));
  }
  return {std::move(g), c, cert->d_min, m};
}

HoloPolyMap complete_general(const HoloPolyMap& p, unsigned d_max, const DisproverConfig& config) {
  const std::size_t n = p.n();
  HermitianPolynomial f(n);
  f.add_raw(MultiIndex(n), MultiIndex(n), GaussianRational(1));
  f -= p.squared_norm_poly();

  const SphereMinimum est = min_sphere_estimate(f, config.search);
  if (est.value <= 0) throw ConstructionError("complete_general: ||p|| >= 1 somewhere on the sphere", est);

  if (p.degree() == 0) {
    // Constant p = c: append sqrt(1 - ||c||^2) z, an affine proper completion.
    const Rational rest = f.coefficient(MultiIndex(n), MultiIndex(n)).re;
    HoloPolyMap g(n);
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial zj(n);
      zj.add_term(MultiIndex::unit(n, j), GaussianRational(1));
      g.push_back(rest, std::move(zj));
    }
    return direct_sum(p, g);
  }
  return direct_sum(p, squared_norm_representation(f, d_max, config).g);
}

// ---------------------------------------------------------------------------

double RationalMap::squared_norm(const ComplexPoint& z) const {
  return numerator.squared_norm(z) / std::norm(denominator.evaluate(z));
}

BallAutomorphism::BallAutomorphism(ComplexPoint a) : a_(std::move(a)) {
  a2_ = 0;
  for (const auto& v : a_) a2_ += std::norm(v);
  if (!(a2_ < 1)) throw InputError("ball automorphism requires ||a|| < 1");
  s_ = std::sqrt(1 - a2_);
}

ComplexPoint BallAutomorphism::apply(const ComplexPoint& w) const {
  if (w.size() != a_.size()) throw InputError("automorphism point dimension mismatch");
  std::complex<double> wa = 0;  // <w, a>
  for (std::size_t j = 0; j < w.size(); ++j) wa += w[j] * std::conj(a_[j]);
  const std::complex<double> denom = 1.0 - wa;
  ComplexPoint out(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    const std::complex<double> proj = a2_ > 0 ? wa / a2_ * a_[j] : 0.0;
    out[j] = (a_[j] - proj - s_ * (w[j] - proj)) / denom;
  }
  return out;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
  Integer num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return Rational(num, den);
}

}  // namespace

RationalMap automorphism_compose(const Point& a, const HoloPolyMap& f) {
  if (a.size() != f.size()) throw InputError("automorphism dimension differs from map target dimension");
  const std::size_t n = f.n();
  std::optional<std::size_t> axis;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].is_zero()) continue;
    if (axis) throw InputError("exact composition supports a along a single coordinate axis only");
    axis = j;
  }
  const Rational a2 = axis ? a[*axis].norm2() : Rational(0);
  if (a2 >= 1) throw InputError("ball automorphism requires ||a|| < 1");
  const Rational s2 = 1 - a2;

  RationalMap out{HoloPolyMap(n), Polynomial::constant(n, GaussianRational(1)), false};
  for (std::size_t j = 0; j < f.size(); ++j) {
    const auto& comp = f[j];
    if (axis && j == *axis) {
      auto root = rational_sqrt(comp.scale);
      if (!root) throw InputError("exact composition needs a rational scale on the axis component");
      const Polynomial fk = GaussianRational(*root) * comp.poly;
      // a_k - F_k over 1 - F_k conj(a_k)
      out.numerator.push_back(1, Polynomial::constant(n, a[j]) - fk);
      out.denominator -= a[j].conj() * fk;
    } else {
      out.numerator.push_back(s2 * comp.scale, GaussianRational(-1) * comp.poly);
    }
  }
  return out;
}

bool lowest_terms_check(const RationalMap& map) {
  for (const auto& comp : map.numerator.components())
    if (!divide(comp.poly, map.denominator).second.is_zero()) return true;
  return false;
}

DenominatorResult denominator_map(const Polynomial& q, unsigned d_max, const DisproverConfig& config) {
  const std::size_t n = q.n();
  if (!q.coefficient(MultiIndex(n)).is_zero()) throw InputError("denominator_map requires q(0) = 0");
  if (q.is_zero()) throw InputError("denominator_map requires a non-zero q");

  HoloPolyMap q_map(n);
  q_map.push_back(1, q);
  HermitianPolynomial neg(n);
  neg -= q_map.squared_norm_poly();
  const SphereMinimum est = min_sphere_estimate(neg, config.search);
  const double sup = std::sqrt(std::max(0.0, -est.value));
  if (sup >= 1) throw ConstructionError("denominator_map: |q| >= 1 somewhere on the sphere", est);

  const Rational epsilon = rationalize_down((1 / sup - 1) / 2, 1000000);
  if (sgn(epsilon) <= 0) throw ConstructionError("denominator_map: |q| is too close to 1 on the sphere", std::nullopt);

  const Rational grow = 1 + epsilon;
  HoloPolyMap p(n);
  p.push_back(1, GaussianRational(grow) * q);
  const HoloPolyMap proper = complete_general(p, d_max, config);

  Point a(proper.size());
  a[0] = GaussianRational(-1 / grow);
  RationalMap map = automorphism_compose(a, proper);
  if (!(map.denominator == Polynomial::constant(n, GaussianRational(1)) + q))
    throw std::logic_error("denominator_map: composed denominator differs from 1 + q");
  map.lowest_terms = lowest_terms_check(map);
  return {std::move(map), epsilon, sup};
}

// ---------------------------------------------------------------------------

namespace {

// Rows sqrt(scale_k) * coefficients of component k over MonomialBasis(n, degree).
Eigen::MatrixXcd coefficient_rows(const HoloPolyMap& map, const MonomialBasis& b) {
  Eigen::MatrixXcd rows = Eigen::MatrixXcd::Zero(map.size(), b.size());
  for (std::size_t k = 0; k < map.size(); ++k) {
    const double root = std::sqrt(map[k].scale.get_d());
    for (const auto& [alpha, c] : map[k].poly.terms())
      rows(k, b.index_of(alpha)) = root * std::complex<double>(c.re.get_d(), c.im.get_d());
  }
  return rows;
}

}  // namespace

Equivalence5Certificate equivalence5_certificate(const HoloPolyMap& P, const HoloPolyMap& N, unsigned d,
                                                 const SphereSearchOptions& search) {
  if (P.n() != N.n()) throw InputError("equivalence5_certificate: P and N live on different dimensions");
  const unsigned m = P.empty() ? N.degree() : P.degree();
  if (!P.is_homogeneous(m) || !N.is_homogeneous(m))
    throw InputError("equivalence5_certificate: P and N must be homogeneous of the same degree");

  const HoloPolyMap hd = H_map(P.n(), d);
  const MonomialBasis target(P.n(), m + d);
  const Eigen::MatrixXcd A = coefficient_rows(tensor(hd, P), target);
  const Eigen::MatrixXcd B = coefficient_rows(tensor(hd, N), target);

  Equivalence5Certificate out;
  // Minimum-norm L with L A = B, i.e. A^* L^* = B^*.
  if (B.rows() == 0 || A.rows() == 0) {
    out.L = Eigen::MatrixXcd::Zero(B.rows(), A.rows());
  } else {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(A.adjoint());
    out.L = cod.solve(B.adjoint()).adjoint();
  }
  const Eigen::MatrixXcd residual = out.L * A - B;
  out.fit_residual = residual.size() ? residual.cwiseAbs().maxCoeff() : 0.0;
  out.fit_ok = out.fit_residual <= 1e-9;
  if (!out.fit_ok) return out;

  const Eigen::Index k = A.rows();
  const Eigen::MatrixXcd gap = Eigen::MatrixXcd::Identity(k, k) - out.L.adjoint() * out.L;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gap);
  out.min_eigenvalue = k ? eig.eigenvalues().minCoeff() : 0.0;
  out.psd_ok = out.min_eigenvalue >= -1e-9;
  if (!out.psd_ok) return out;

  const Eigen::VectorXd clamped = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::MatrixXcd root = eig.eigenvectors() * clamped.asDiagonal() * eig.eigenvectors().adjoint();
  const Eigen::MatrixXcd rows = root * A;

  // ||rows * w(z)||^2 as a Hermitian form in the monomials w.
  const Eigen::MatrixXcd gram = rows.transpose() * rows.conjugate();
  std::vector<FloatHermitian::FloatEntry> entries;
  for (std::size_t i = 0; i < target.size(); ++i)
    for (std::size_t j = 0; j < target.size(); ++j)
      if (std::abs(gram(i, j)) > 0) entries.push_back({target[i], target[j], gram(i, j)});
  out.variety_min = min_sphere_estimate(FloatHermitian(P.n(), entries), search).value;
  out.variety_ok = out.variety_min > 1e-8;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

template <class SquaredNorm>
ProperReport verify_with(std::size_t n, SquaredNorm squared_norm, std::size_t samples, double tol,
                         std::uint64_t seed) {
  std::vector<double> dev(samples);
#pragma omp parallel for schedule(static)
  for (long k = 0; k < static_cast<long>(samples); ++k)
    dev[k] = std::abs(squared_norm(sphere_sample(n, seed, k)) - 1.0);
  ProperReport r{samples, seed, 0.0, false};
  for (double v : dev) r.max_deviation = std::max(r.max_deviation, v);
  r.pass = samples > 0 && r.max_deviation <= tol;
  return r;
}

}  // namespace

ProperReport verify_proper(const HoloPolyMap& map, std::size_t samples, double tol, std::uint64_t seed) {
  return verify_with(map.n(), [&](const ComplexPoint& z) { return map.squared_norm(z); }, samples, tol, seed);
}

ProperReport verify_proper(const RationalMap& map, std::size_t samples, double tol, std::uint64_t seed) {
  return verify_with(map.numerator.n(), [&](const ComplexPoint& z) { return map.squared_norm(z); }, samples, tol,
                     seed);
}

double ExpansionRelations::max_residual() const {
  double r = constant_residual;
  for (double v : fourier_residuals) r = std::max(r, v);
  return r;
}

ExpansionRelations homogeneous_expansion_relations(const HoloPolyMap& map, std::size_t samples, std::uint64_t seed) {
  const unsigned top = map.degree();
  const std::size_t n = map.n();

  // parts[c][k]: homogeneous part of degree k of component c.
  std::vector<std::vector<Polynomial>> parts;
  for (const auto& comp : map.components()) {
    std::vector<Polynomial> split;
    for (unsigned k = 0; k <= top; ++k) split.push_back(comp.poly.homogeneous_part(k));
    parts.push_back(std::move(split));
  }

  ExpansionRelations out;
  out.fourier_residuals.assign(top, 0.0);
  for (std::size_t sample = 0; sample < samples; ++sample) {
    const ComplexPoint z = sphere_sample(n, seed, sample);
    const double r2 = norm(z) * norm(z);
    // vals[c][k] = sqrt(scale_c) * F_{c,k}(z)
    std::vector<std::vector<std::complex<double>>> vals(parts.size());
    for (std::size_t c = 0; c < parts.size(); ++c) {
      const double root = std::sqrt(map[c].scale.get_d());
      for (const auto& part : parts[c]) vals[c].push_back(root * part.evaluate(z));
    }
    // <H_{D-l} (x) u, H_{D-l} (x) v> = ||z||^{2(D-l)} <u, v>
    for (unsigned s = 0; s <= top; ++s) {
      std::complex<double> total = 0;
      for (unsigned l = 0; l + s <= top; ++l) {
        const double weight = std::pow(r2, static_cast<double>(top - l));
        for (const auto& v : vals) total += weight * v[l + s] * std::conj(v[l]);
      }
      if (s == 0)
        out.constant_residual = std::max(out.constant_residual, std::abs(total - std::pow(r2, top)));
      else
        out.fourier_residuals[s - 1] = std::max(out.fourier_residuals[s - 1], std::abs(total));
    }
  }
  return out;
}

}  // namespace hermpos
