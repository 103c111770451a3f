#include "hermpos/kernels.hpp"

#include <omp.h>

namespace hermpos::kernels {

namespace {

constexpr long kAbsent = -1;

// down[k * n + j] = index of dst[k] - e_j in src, or kAbsent.
std::vector<long> lowering_table(const MonomialBasis& src, const MonomialBasis& dst) {
  const std::size_t n = dst.n();
  std::vector<long> down(dst.size() * n, kAbsent);
  for (std::size_t k = 0; k < dst.size(); ++k) {
    MultiIndex mu = dst[k];
    for (std::size_t j = 0; j < n; ++j) {
      if (mu[j] == 0) continue;
      --mu[j];
      down[k * n + j] = static_cast<long>(src.index_of(mu));
      ++mu[j];
    }
  }
  return down;
}

}  // namespace

std::vector<GaussianRational> multiply_once(const MonomialBasis& src, const MonomialBasis& dst,
                                            std::span<const GaussianRational> c) {
  const std::size_t n = dst.n();
  const std::size_t s = src.size();
  const std::size_t t = dst.size();
  const std::vector<long> down = lowering_table(src, dst);
  std::vector<GaussianRational> e(t * t);

#pragma omp parallel for schedule(dynamic)
  for (long row = 0; row < static_cast<long>(t); ++row) {
    for (std::size_t col = 0; col < t; ++col) {
      GaussianRational& out = e[row * t + col];
      for (std::size_t j = 0; j < n; ++j) {
        const long a = down[row * n + j];
        const long b = down[col * n + j];
        if (a == kAbsent || b == kAbsent) continue;
        const GaussianRational& v = c[a * s + b];
        if (!v.is_zero()) out += v;
      }
    }
  }
  return e;
}

std::vector<GaussianRational> norm_power(const MonomialBasis& src, const MonomialBasis& dst, unsigned d,
                                         std::span<const GaussianRational> c) {
  const std::size_t s = src.size();
  const std::size_t t = dst.size();
  const MonomialBasis shifts(dst.n(), d);
  const std::size_t g = shifts.size();

  std::vector<Rational> weight(g);
  for (std::size_t k = 0; k < g; ++k) weight[k] = multinomial(d, shifts[k]);

  // shift[k * g + l] = index of dst[k] - shifts[l] in src.
  std::vector<long> shift(t * g, kAbsent);
  for (std::size_t k = 0; k < t; ++k)
    for (std::size_t l = 0; l < g; ++l)
      if (auto diff = sub_checked(dst[k], shifts[l])) shift[k * g + l] = static_cast<long>(src.index_of(*diff));

  std::vector<GaussianRational> e(t * t);

#pragma omp parallel for schedule(dynamic)
  for (long row = 0; row < static_cast<long>(t); ++row) {
    for (std::size_t col = 0; col < t; ++col) {
      GaussianRational& out = e[row * t + col];
      for (std::size_t l = 0; l < g; ++l) {
        const long a = shift[row * g + l];
        const long b = shift[col * g + l];
        if (a == kAbsent || b == kAbsent) continue;
        const GaussianRational& v = c[a * s + b];
        if (v.is_zero()) continue;
        out.add_product(weight[l], v);
      }
    }
  }
  return e;
}

std::vector<GaussianRational> product(const MonomialBasis& a_basis, std::span<const GaussianRational> a,
                                      const MonomialBasis& b_basis, std::span<const GaussianRational> b,
                                      const MonomialBasis& dst) {
  const std::size_t sa = a_basis.size();
  const std::size_t sb = b_basis.size();
  const std::size_t t = dst.size();

  // split[k * sa + i] = index of dst[k] - a_basis[i] in b_basis.
  std::vector<long> split(t * sa, kAbsent);
  for (std::size_t k = 0; k < t; ++k)
    for (std::size_t i = 0; i < sa; ++i)
      if (auto diff = sub_checked(dst[k], a_basis[i])) split[k * sa + i] = static_cast<long>(b_basis.index_of(*diff));

  std::vector<GaussianRational> e(t * t);

#pragma omp parallel for schedule(dynamic)
  for (long row = 0; row < static_cast<long>(t); ++row) {
    for (std::size_t col = 0; col < t; ++col) {
      GaussianRational& out = e[row * t + col];
      for (std::size_t i = 0; i < sa; ++i) {
        const long bi = split[row * sa + i];
        if (bi == kAbsent) continue;
        for (std::size_t j = 0; j < sa; ++j) {
          const long bj = split[col * sa + j];
          if (bj == kAbsent) continue;
          out.add_product(a[i * sa + j], b[bi * sb + bj]);
        }
      }
    }
  }
  return e;
}

EliminationResult eliminate(std::vector<GaussianRational> w, std::size_t size, PivotRule rule, bool record) {
  EliminationResult result;
  std::vector<char> active(size, 1);
  std::vector<std::size_t> live;
  live.reserve(size);
  std::size_t remaining = size;
  auto at = [&](std::size_t i, std::size_t j) -> GaussianRational& { return w[i * size + j]; };

  while (remaining > 0) {
    live.clear();
    for (std::size_t i = 0; i < size; ++i)
      if (active[i]) live.push_back(i);

    long p = kAbsent, q = kAbsent;
    if (rule == PivotRule::none) {
      p = static_cast<long>(live.front());
      if (sgn(at(p, p).re) <= 0) {
        result.positive_definite = false;
        return result;
      }
    } else {
      for (std::size_t i : live)
        if (!at(i, i).is_zero()) {
          p = static_cast<long>(i);
          break;
        }
      if (p == kAbsent) {
        for (std::size_t a = 0; a < live.size() && q == kAbsent; ++a)
          for (std::size_t b = a + 1; b < live.size(); ++b)
            if (!at(live[a], live[b]).is_zero()) {
              p = static_cast<long>(live[a]);
              q = static_cast<long>(live[b]);
              break;
            }
        if (p == kAbsent) {
          result.zero += remaining;
          break;
        }
      }
    }

    if (q == kAbsent) {
      const Rational pivot = at(p, p).re;
      if (sgn(pivot) > 0)
        ++result.positive;
      else
        ++result.negative;
      std::vector<GaussianRational> ratio(size);
      for (std::size_t i : live) ratio[i] = at(i, p) / pivot;
      if (record) result.terms.push_back({pivot, ratio});
      active[p] = 0;
      --remaining;

#pragma omp parallel for schedule(dynamic)
      for (long k = 0; k < static_cast<long>(live.size()); ++k) {
        const std::size_t i = live[k];
        if (i == static_cast<std::size_t>(p) || ratio[i].is_zero()) continue;
        for (std::size_t j : live) {
          if (j == static_cast<std::size_t>(p)) continue;
          const GaussianRational& pj = w[p * size + j];
          if (!pj.is_zero()) w[i * size + j].sub_product(ratio[i], pj);
        }
      }
    } else {
      // Block [[0, b], [conj b, 0]]: contributes a v^* + v a^* with v = c / b.
      const GaussianRational b = at(p, q);
      std::vector<GaussianRational> col_a(size), col_v(size);
      for (std::size_t i : live) {
        col_a[i] = at(i, p);
        col_v[i] = at(i, q) / b;
      }
      if (record) {
        std::vector<GaussianRational> plus(size), minus(size);
        for (std::size_t i : live) {
          plus[i] = col_a[i] + col_v[i];
          minus[i] = col_a[i] - col_v[i];
        }
        result.terms.push_back({Rational(1, 2), std::move(plus)});
        result.terms.push_back({Rational(-1, 2), std::move(minus)});
      }
      ++result.positive;
      ++result.negative;
      active[p] = active[q] = 0;
      remaining -= 2;

#pragma omp parallel for schedule(dynamic)
      for (long k = 0; k < static_cast<long>(live.size()); ++k) {
        const std::size_t i = live[k];
        if (!active[i]) continue;
        for (std::size_t j : live) {
          if (!active[j]) continue;
          GaussianRational& out = w[i * size + j];
          out.sub_product(col_a[i], col_v[j].conj());
          out.sub_product(col_v[i], col_a[j].conj());
        }
      }
    }
  }
  result.positive_definite = result.positive == size;
  return result;
}

}  // namespace hermpos::kernels
