#include "hermpos/stabilization.hpp"

#include "hermpos/kernels.hpp"

#include <cmath>
#include <numbers>

namespace hermpos {

BihomogeneousForm multiply_once(const BihomogeneousForm& form) {
  auto dst = basis(form.n(), form.m() + 1);
  return BihomogeneousForm(dst, kernels::multiply_once(form.basis(), *dst, form.matrix()));
}

BihomogeneousForm multiply_by_norm_power(const BihomogeneousForm& form, unsigned d) {
  if (d == 0) return form;
  auto dst = basis(form.n(), form.m() + d);
  return BihomogeneousForm(dst, kernels::norm_power(form.basis(), *dst, d, form.matrix()));
}

HoloPolyMap holomorphic_factor(const BihomogeneousForm& form) {
  auto r = kernels::eliminate({form.matrix().begin(), form.matrix().end()}, form.size(), kernels::PivotRule::none,
                              true);
  if (!r.positive_definite) throw InputError("holomorphic_factor: form is not positive definite");
  HoloPolyMap g(form.n());
  for (auto& term : r.terms) {
    Polynomial p(form.n());
    for (std::size_t k = 0; k < term.vec.size(); ++k) p.add_term(form.basis()[k], term.vec[k]);
    g.push_back(term.weight, std::move(p));
  }
  return g;
}

namespace {

// r * u with r a rational modulus and u a rational point on the unit circle
// (u = ((1 - t^2) + 2it) / (1 + t^2), t = tan(theta / 2)), so that equal moduli
// stay equal after rounding.
GaussianRational rationalize_polar(std::complex<double> v, long den) {
  const Rational r = rationalize(std::abs(v), den);
  if (sgn(r) == 0) return {};
  double theta = std::arg(v);
  const bool flip = std::abs(theta) > std::numbers::pi / 2;
  if (flip) theta = theta > 0 ? theta - std::numbers::pi : theta + std::numbers::pi;
  const Rational t = rationalize(std::tan(theta / 2), den);
  const Rational q = 1 + t * t;
  GaussianRational u((1 - t * t) / q, 2 * t / q);
  if (flip) u = -u;
  return {r * u.re, r * u.im};
}

// Moves z onto the complex line through it with its largest coordinate equal
// to 1, then rationalizes with increasing denominators until the exact sign
// agrees with the requested strictness.
std::optional<std::pair<Point, Rational>> confirm_on_line(const BihomogeneousForm& form, const ComplexPoint& z,
                                                          bool allow_zero) {
  std::size_t k = 0;
  for (std::size_t j = 1; j < z.size(); ++j)
    if (std::abs(z[j]) > std::abs(z[k])) k = j;
  if (std::abs(z[k]) == 0) return std::nullopt;
  const std::complex<double> scale = std::conj(z[k]) / std::norm(z[k]);
  ComplexPoint line(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) line[j] = z[j] * scale;

  for (long den : {1L, 2L, 10L, 100L, 1000L, 10000L, 100000L, 1000000L, 1000000000L, 1000000000000L}) {
    Point cartesian, polar;
    for (const auto& v : line) {
      cartesian.emplace_back(rationalize(v.real(), den), rationalize(v.imag(), den));
      polar.push_back(rationalize_polar(v, den));
    }
    for (Point* exact : {&cartesian, &polar}) {
      Rational value = evaluate(form, *exact);
      if (sgn(value) < 0 || (allow_zero && sgn(value) == 0)) return std::make_pair(std::move(*exact), std::move(value));
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<NegativeWitness> find_negative_witness(const BihomogeneousForm& form, const DisproverConfig& config,
                                                     double* estimate) {
  const SphereMinimum best = min_sphere_estimate(form, config.search);
  if (estimate) *estimate = best.value;
  const bool qualifies = best.value < -config.threshold || (config.allow_zero && best.value <= config.threshold);
  if (!qualifies) return std::nullopt;
  auto confirmed = confirm_on_line(form, best.witness, config.allow_zero);
  if (!confirmed) return std::nullopt;
  return NegativeWitness{best.witness, best.value, std::move(confirmed->first), std::move(confirmed->second)};
}

StabilizationResult stabilize(const BihomogeneousForm& form, unsigned d_max, const DisproverConfig& config) {
  BihomogeneousForm current = form;
  for (unsigned d = 0;; ++d) {
    if (is_positive_definite(current)) {
      HoloPolyMap g = holomorphic_factor(current);
      return StabilizationCertificate{d, std::move(current), std::move(g), true};
    }
    if (d == d_max) break;
    current = multiply_once(current);
  }
  double estimate = 0;
  if (auto witness = find_negative_witness(form, config, &estimate)) return *witness;
  return NotStabilized{d_max, estimate};
}

// ---------------------------------------------------------------------------

namespace {

std::complex<double> to_complex(const GaussianRational& x) { return {x.re.get_d(), x.im.get_d()}; }

std::complex<double> complex_monomial(const ComplexPoint& z, const MultiIndex& a) {
  std::complex<double> v = 1;
  for (std::size_t j = 0; j < z.size(); ++j)
    for (unsigned e = 0; e < a[j]; ++e) v *= z[j];
  return v;
}

double real_monomial(const std::vector<double>& x, const MultiIndex& a) {
  double v = 1;
  for (std::size_t j = 0; j < x.size(); ++j) v *= std::pow(x[j], static_cast<double>(a[j]));
  return v;
}

// alpha = beta + mu - nu when it is a valid multi-index.
std::optional<MultiIndex> shifted(const MultiIndex& beta, const MultiIndex& mu, const MultiIndex& nu) {
  MultiIndex a(beta.size());
  for (std::size_t j = 0; j < beta.size(); ++j) {
    const long v = static_cast<long>(beta[j]) + mu[j] - static_cast<long>(nu[j]);
    if (v < 0) return std::nullopt;
    a[j] = static_cast<unsigned>(v);
  }
  return a;
}

template <class EntryFn>
Eigen::MatrixXcd index_matrix(const BihomogeneousForm& form, unsigned index_degree, EntryFn entry) {
  const MonomialBasis idx(form.n(), index_degree);
  const std::size_t s = idx.size();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(s, s);
#pragma omp parallel for schedule(dynamic)
  for (long r = 0; r < static_cast<long>(s); ++r)
    for (std::size_t c = 0; c < s; ++c) {
      std::complex<double> v = 0;
      for (std::size_t b = 0; b < form.size(); ++b) {
        const MultiIndex& beta = form.basis()[b];
        auto alpha = shifted(beta, idx[r], idx[c]);
        if (!alpha) continue;
        const GaussianRational& coeff = form(form.basis().index_of(*alpha), b);
        if (coeff.is_zero()) continue;
        v += to_complex(coeff) * entry(*alpha, beta, idx[r], idx[c]);
      }
      out(r, c) = v;
    }
  return out;
}

std::vector<double> normalized(const MultiIndex& mu) {
  std::vector<double> x(mu.size());
  const double total = mu.degree();
  for (std::size_t j = 0; j < mu.size(); ++j) x[j] = mu[j] / total;
  return x;
}

}  // namespace

Eigen::MatrixXcd proposition1_matrix(const BihomogeneousForm& form, const ComplexPoint& z, unsigned index_degree) {
  if (z.size() != form.n()) throw InputError("point dimension differs from form dimension");
  if (norm(z) == 0) throw InputError("proposition1_matrix requires z != 0");
  return index_matrix(form, index_degree, [&](const MultiIndex& alpha, const MultiIndex& beta, const MultiIndex&,
                                              const MultiIndex&) {
    return complex_monomial(z, alpha) * std::conj(complex_monomial(z, beta));
  });
}

Eigen::MatrixXcd corollary1_matrix(const BihomogeneousForm& form, unsigned big_n) {
  if (big_n == 0) throw InputError("corollary1_matrix requires N >= 1");
  return index_matrix(form, big_n, [](const MultiIndex& alpha, const MultiIndex& beta, const MultiIndex& mu,
                                      const MultiIndex& nu) {
    return std::complex<double>(real_monomial(normalized(mu), alpha) * real_monomial(normalized(nu), beta));
  });
}

Eigen::MatrixXcd corollary1_shifted_matrix(const BihomogeneousForm& form, unsigned big_n) {
  if (big_n == 0) throw InputError("corollary1_shifted_matrix requires N >= 1");
  return index_matrix(form, big_n, [](const MultiIndex& alpha, const MultiIndex& beta, const MultiIndex&,
                                      const MultiIndex& nu) {
    return std::complex<double>(real_monomial(normalized(nu), alpha + beta));
  });
}

double min_eigenvalue(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0;
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

// ---------------------------------------------------------------------------
// Polya

RealPolynomial::RealPolynomial(std::size_t n, unsigned m, const std::map<MultiIndex, Rational>& terms)
    : RealPolynomial(n, m) {
  for (const auto& [alpha, c] : terms) add_term(alpha, c);
}

Rational RealPolynomial::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RealPolynomial::add_term(const MultiIndex& alpha, const Rational& c) {
  if (alpha.size() != n_) throw InputError("monomial length differs from polynomial dimension");
  if (alpha.degree() != m_) throw InputError("term degree differs from polynomial degree");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational RealPolynomial::evaluate(const std::vector<Rational>& x) const {
  if (x.size() != n_) throw InputError("point dimension differs from polynomial dimension");
  Rational total;
  for (const auto& [alpha, c] : terms_) {
    Rational mono = c;
    for (std::size_t j = 0; j < n_; ++j)
      for (unsigned e = 0; e < alpha[j]; ++e) mono *= x[j];
    total += mono;
  }
  return total;
}

double RealPolynomial::evaluate(const std::vector<double>& x) const {
  if (x.size() != n_) throw InputError("point dimension differs from polynomial dimension");
  double total = 0;
  for (const auto& [alpha, c] : terms_) total += c.get_d() * real_monomial(x, alpha);
  return total;
}

RealPolynomial RealPolynomial::times_linear_sum() const {
  RealPolynomial out(n_, m_ + 1);
  for (const auto& [alpha, c] : terms_)
    for (std::size_t j = 0; j < n_; ++j) out.add_term(alpha + MultiIndex::unit(n_, j), c);
  return out;
}

std::vector<std::pair<MultiIndex, Rational>> polya_coefficients(const RealPolynomial& p, unsigned d) {
  const MonomialBasis target(p.n(), p.degree() + d);
  const Rational d_fact(factorial(d));
  std::vector<std::pair<MultiIndex, Rational>> out(target.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(target.size()); ++k) {
    const MultiIndex& mu = target[k];
    Rational sum;
    for (const auto& [alpha, c] : p.terms())
      if (auto diff = sub_checked(mu, alpha)) sum += c / Rational(multi_factorial(*diff));
    out[k] = {mu, d_fact * sum};
  }
  return out;
}

PolyaResult polya_stabilize(const RealPolynomial& p, unsigned d_max, const DisproverConfig& config) {
  for (unsigned d = 0; d <= d_max; ++d) {
    auto coeffs = polya_coefficients(p, d);
    bool positive = true;
    for (const auto& [mu, c] : coeffs)
      if (sgn(c) <= 0) {
        positive = false;
        break;
      }
    if (positive) return PolyaCertificate{d, std::move(coeffs)};
  }

  // x_j = |z_j|^2 maps the unit sphere onto the simplex.
  const SphereMinimum best = min_sphere_estimate(to_diagonal_form(p), config.search);
  const bool qualifies = best.value < -config.threshold || (config.allow_zero && best.value <= config.threshold);
  if (qualifies) {
    std::vector<double> x(p.n());
    double top = 0;
    for (std::size_t j = 0; j < p.n(); ++j) {
      x[j] = std::norm(best.witness[j]);
      top = std::max(top, x[j]);
    }
    for (long den : {1L, 2L, 10L, 100L, 1000L, 10000L, 100000L, 1000000L, 1000000000L, 1000000000000L}) {
      std::vector<Rational> exact;
      for (double v : x) exact.push_back(rationalize(v / top, den));
      Rational value = p.evaluate(exact);
      if (sgn(value) < 0 || (config.allow_zero && sgn(value) == 0))
        return SimplexWitness{x, best.value, std::move(exact), std::move(value)};
    }
  }
  return NotStabilized{d_max, best.value};
}

RealPolynomial to_real_polynomial(const BihomogeneousForm& form) {
  if (!form.is_diagonal()) throw InputError("diagonal bridge requires a diagonal form");
  RealPolynomial p(form.n(), form.m());
  for (std::size_t k = 0; k < form.size(); ++k) p.add_term(form.basis()[k], form(k, k).re);
  return p;
}

BihomogeneousForm to_diagonal_form(const RealPolynomial& p) {
  auto b = basis(p.n(), p.degree());
  std::vector<GaussianRational> data(b->size() * b->size());
  for (const auto& [alpha, c] : p.terms()) {
    const std::size_t k = b->index_of(alpha);
    data[k * b->size() + k] = c;
  }
  return BihomogeneousForm(b, std::move(data));
}

}  // namespace hermpos
