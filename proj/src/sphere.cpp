#include "hermpos/sphere.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <random>

namespace hermpos {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void normalize(ComplexPoint& z) {
  const double r = norm(z);
  for (auto& v : z) v /= r;
}

double real_dot(const ComplexPoint& a, const ComplexPoint& b) {
  double s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j].real() * b[j].real() + a[j].imag() * b[j].imag();
  return s;
}

}  // namespace

double norm(const ComplexPoint& z) {
  double s = 0;
  for (const auto& v : z) s += std::norm(v);
  return std::sqrt(s);
}

FloatHermitian::FloatHermitian(const HermitianPolynomial& f) : n_(f.n()) {
  std::map<MultiIndex, std::size_t> slot;
  auto intern = [&](const MultiIndex& a) {
    auto [it, inserted] = slot.try_emplace(a, monomials_.size());
    if (inserted) monomials_.push_back(a);
    return it->second;
  };
  for (const auto& [key, c] : f.terms())
    terms_.push_back({intern(key.first), intern(key.second), {c.re.get_d(), c.im.get_d()}});
}

FloatHermitian::FloatHermitian(std::size_t n, const std::vector<FloatEntry>& entries) : n_(n) {
  std::map<MultiIndex, std::size_t> slot;
  auto intern = [&](const MultiIndex& a) {
    auto [it, inserted] = slot.try_emplace(a, monomials_.size());
    if (inserted) monomials_.push_back(a);
    return it->second;
  };
  for (const auto& e : entries) terms_.push_back({intern(e.alpha), intern(e.beta), e.coeff});
}

std::complex<double> FloatHermitian::monomial(const ComplexPoint& z, std::size_t k) const {
  std::complex<double> v = 1;
  const MultiIndex& a = monomials_[k];
  for (std::size_t j = 0; j < n_; ++j)
    for (unsigned e = 0; e < a[j]; ++e) v *= z[j];
  return v;
}

double FloatHermitian::value(const ComplexPoint& z) const {
  std::vector<std::complex<double>> mono(monomials_.size());
  for (std::size_t k = 0; k < mono.size(); ++k) mono[k] = monomial(z, k);
  double total = 0;
  for (const auto& t : terms_) total += (t.coeff * mono[t.alpha] * std::conj(mono[t.beta])).real();
  return total;
}

ComplexPoint FloatHermitian::gradient(const ComplexPoint& z) const {
  std::vector<std::complex<double>> mono(monomials_.size());
  for (std::size_t k = 0; k < mono.size(); ++k) mono[k] = monomial(z, k);
  ComplexPoint g(n_, 0.0);
  for (const auto& t : terms_) {
    const MultiIndex& beta = monomials_[t.beta];
    const std::complex<double> head = t.coeff * mono[t.alpha];
    for (std::size_t j = 0; j < n_; ++j) {
      if (beta[j] == 0) continue;
      std::complex<double> lowered = 1;
      for (std::size_t i = 0; i < n_; ++i) {
        const unsigned e = beta[i] - (i == j ? 1u : 0u);
        for (unsigned k = 0; k < e; ++k) lowered *= z[i];
      }
      g[j] += 2.0 * static_cast<double>(beta[j]) * head * std::conj(lowered);
    }
  }
  return g;
}

ComplexPoint sphere_sample(std::size_t n, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index + 0x51ed27ULL)));
  std::normal_distribution<double> gauss;
  ComplexPoint z(n);
  do {
    for (auto& v : z) v = {gauss(rng), gauss(rng)};
  } while (norm(z) < 1e-300);
  normalize(z);
  return z;
}

std::vector<double> evaluate_samples(const FloatHermitian& f, std::uint64_t seed, std::size_t count, bool parallel) {
  std::vector<double> values(count);
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long k = 0; k < static_cast<long>(count); ++k) values[k] = f.value(sphere_sample(f.n(), seed, k));
  } else {
    for (std::size_t k = 0; k < count; ++k) values[k] = f.value(sphere_sample(f.n(), seed, k));
  }
  return values;
}

namespace {

SphereMinimum refine(const FloatHermitian& f, ComplexPoint z, std::size_t iters) {
  double fz = f.value(z);
  double step = 0.1;
  for (std::size_t it = 0; it < iters; ++it) {
    ComplexPoint g = f.gradient(z);
    const double radial = real_dot(g, z);
    for (std::size_t j = 0; j < z.size(); ++j) g[j] -= radial * z[j];
    const double g2 = real_dot(g, g);
    if (g2 < 1e-30) break;

    double t = std::min(step * 4.0, 1e3);
    bool moved = false;
    while (t > 1e-18) {
      ComplexPoint trial = z;
      for (std::size_t j = 0; j < z.size(); ++j) trial[j] -= t * g[j];
      normalize(trial);
      const double ft = f.value(trial);
      if (ft <= fz - 1e-4 * t * g2) {
        z = std::move(trial);
        fz = ft;
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved) break;
    step = t;
  }
  return {fz, std::move(z)};
}

}  // namespace

SphereMinimum min_sphere_estimate(const FloatHermitian& f, const SphereSearchOptions& options) {
  const std::size_t count = std::max<std::size_t>(options.samples, 1);
  const std::vector<double> values = evaluate_samples(f, options.seed, count, true);

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  const std::size_t keep = std::min(std::max<std::size_t>(options.refine_candidates, 1), count);
  std::partial_sort(order.begin(), order.begin() + keep, order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b] || (values[a] == values[b] && a < b);
  });

  std::vector<SphereMinimum> refined(keep);
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < static_cast<long>(keep); ++k)
    refined[k] = refine(f, sphere_sample(f.n(), options.seed, order[k]), options.refine_iters);

  std::size_t best = 0;
  for (std::size_t k = 1; k < keep; ++k)
    if (refined[k].value < refined[best].value) best = k;
  return refined[best];
}

SphereMinimum min_sphere_estimate(const HermitianPolynomial& f, const SphereSearchOptions& options) {
  return min_sphere_estimate(FloatHermitian(f), options);
}

SphereMinimum min_sphere_estimate(const BihomogeneousForm& f, const SphereSearchOptions& options) {
  return min_sphere_estimate(FloatHermitian(f), options);
}

}  // namespace hermpos
