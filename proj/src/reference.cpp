#include "hermpos/reference.hpp"

namespace hermpos::reference {

std::vector<GaussianRational> multiply_once(const MonomialBasis& src, const MonomialBasis& dst,
                                            std::span<const GaussianRational> c) {
  const std::size_t s = src.size(), t = dst.size();
  std::vector<GaussianRational> e(t * t);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      const GaussianRational& v = c[a * s + b];
      if (v.is_zero()) continue;
      for (std::size_t j = 0; j < src.n(); ++j) {
        const MultiIndex ej = MultiIndex::unit(src.n(), j);
        e[dst.index_of(src[a] + ej) * t + dst.index_of(src[b] + ej)] += v;
      }
    }
  return e;
}

std::vector<GaussianRational> norm_power(const MonomialBasis& src, const MonomialBasis& dst, unsigned d,
                                         std::span<const GaussianRational> c) {
  const std::size_t s = src.size(), t = dst.size();
  const MonomialBasis shifts(src.n(), d);
  std::vector<GaussianRational> e(t * t);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t b = 0; b < s; ++b) {
      const GaussianRational& v = c[a * s + b];
      if (v.is_zero()) continue;
      for (const MultiIndex& gamma : shifts) {
        GaussianRational term = v;
        term *= Rational(multinomial(d, gamma));
        e[dst.index_of(src[a] + gamma) * t + dst.index_of(src[b] + gamma)] += term;
      }
    }
  return e;
}

kernels::EliminationResult eliminate(std::vector<GaussianRational> w, std::size_t size, kernels::PivotRule rule,
                                     bool record) {
  kernels::EliminationResult result;
  std::vector<bool> done(size, false);

  for (std::size_t step = 0; step < size;) {
    std::size_t p = size, q = size;
    for (std::size_t i = 0; i < size; ++i) {
      if (done[i]) continue;
      if (rule == kernels::PivotRule::none || !w[i * size + i].is_zero()) {
        p = i;
        break;
      }
    }
    if (rule == kernels::PivotRule::none && sgn(w[p * size + p].re) <= 0) return result;
    if (p == size) {
      for (std::size_t i = 0; i < size && q == size; ++i)
        for (std::size_t j = i + 1; j < size && !done[i]; ++j)
          if (!done[j] && !w[i * size + j].is_zero()) {
            p = i;
            q = j;
            break;
          }
      if (p == size) {
        result.zero = size - step;
        break;
      }
    }

    if (q == size) {
      const Rational d = w[p * size + p].re;
      (sgn(d) > 0 ? result.positive : result.negative) += 1;
      std::vector<GaussianRational> u(size);
      for (std::size_t i = 0; i < size; ++i)
        if (!done[i]) u[i] = w[i * size + p] / d;
      done[p] = true;
      ++step;
      // W -= d u u^*
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
          if (!done[i] && !done[j]) w[i * size + j] -= d * u[i] * u[j].conj();
      if (record) result.terms.push_back({d, std::move(u)});
    } else {
      const GaussianRational b = w[p * size + q];
      std::vector<GaussianRational> a(size), v(size);
      for (std::size_t i = 0; i < size; ++i)
        if (!done[i]) {
          a[i] = w[i * size + p];
          v[i] = w[i * size + q] / b;
        }
      done[p] = done[q] = true;
      step += 2;
      ++result.positive;
      ++result.negative;
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
          if (!done[i] && !done[j]) w[i * size + j] -= a[i] * v[j].conj() + v[i] * a[j].conj();
      if (record) {
        std::vector<GaussianRational> plus(size), minus(size);
        for (std::size_t i = 0; i < size; ++i) {
          plus[i] = a[i] + v[i];
          minus[i] = a[i] - v[i];
        }
        result.terms.push_back({Rational(1, 2), std::move(plus)});
        result.terms.push_back({Rational(-1, 2), std::move(minus)});
      }
    }
  }
  result.positive_definite = result.positive == size;
  return result;
}

}  // namespace hermpos::reference
