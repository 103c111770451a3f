// Serial reference vs OpenMP kernels.
//
//   bench_kernels [repeats]

#include "hermpos/reference.hpp"
#include "hermpos/stabilization.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

using namespace hermpos;

namespace {

template <class Fn>
double seconds(int repeats, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel, same ? "match" : "MISMATCH");
}

BihomogeneousForm dense_form(std::size_t n, unsigned m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  auto b = basis(n, m);
  const std::size_t s = b->size();
  std::vector<GaussianRational> c(s * s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      Rational re(num(rng), den(rng)), im(num(rng), den(rng));
      re.canonicalize();
      im.canonicalize();
      if (i == j) {
        c[i * s + i] = GaussianRational(re);
      } else {
        c[i * s + j] = GaussianRational(re, im);
        c[j * s + i] = c[i * s + j].conj();
      }
    }
  return BihomogeneousForm(b, std::move(c));
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), repeats);
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

  {
    const auto f = dense_form(4, 5, 1);
    const auto src = basis(4, 5), dst = basis(4, 6);
    std::vector<GaussianRational> a, b;
    const double s = seconds(repeats, [&] { a = reference::multiply_once(*src, *dst, f.matrix()); });
    const double p = seconds(repeats, [&] { b = kernels::multiply_once(*src, *dst, f.matrix()); });
    row("multiply_once n=4 m=5", s, p, a == b);
  }
  {
    const auto f = dense_form(3, 3, 2);
    const unsigned d = 10;
    const auto src = basis(3, 3), dst = basis(3, 3 + d);
    std::vector<GaussianRational> a, b;
    const double s = seconds(repeats, [&] { a = reference::norm_power(*src, *dst, d, f.matrix()); });
    const double p = seconds(repeats, [&] { b = kernels::norm_power(*src, *dst, d, f.matrix()); });
    row("norm_power n=3 m=3 d=10", s, p, a == b);
  }
  {
    // positive definite: ||z||^{2d} p with p positive on the sphere
    const auto f = multiply_by_norm_power(norm_power_form(3, 2) + scaled(dense_form(3, 2, 3), Rational(1, 40)), 7);
    const std::vector<GaussianRational> m(f.matrix().begin(), f.matrix().end());
    kernels::EliminationResult a, b;
    const double s = seconds(repeats, [&] { a = reference::eliminate(m, f.size(), kernels::PivotRule::none, true); });
    const double p = seconds(repeats, [&] { b = kernels::eliminate(m, f.size(), kernels::PivotRule::none, true); });
    char name[64];
    std::snprintf(name, sizeof name, "LDL no pivot size=%zu", f.size());
    row(name, s, p, a.positive_definite == b.positive_definite && a.terms.size() == b.terms.size());
  }
  {
    const auto f = dense_form(3, 5, 4);
    const std::vector<GaussianRational> m(f.matrix().begin(), f.matrix().end());
    kernels::EliminationResult a, b;
    const double s = seconds(repeats, [&] { a = reference::eliminate(m, f.size(), kernels::PivotRule::symmetric, false); });
    const double p = seconds(repeats, [&] { b = kernels::eliminate(m, f.size(), kernels::PivotRule::symmetric, false); });
    row("inertia size=21", s, p, a.positive == b.positive && a.negative == b.negative && a.zero == b.zero);
  }
  {
    const FloatHermitian f(dense_form(3, 4, 5));
    std::vector<double> a, b;
    const double s = seconds(repeats, [&] { a = evaluate_samples(f, 0, 200000, false); });
    const double p = seconds(repeats, [&] { b = evaluate_samples(f, 0, 200000, true); });
    row("sphere samples n=3 m=4 x200000", s, p, a == b);
  }
  return 0;
}
