#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermpos/reference.hpp"
#include "support.hpp"

using namespace hermpos;
using namespace testing_support;

namespace {

std::vector<GaussianRational> dense(const BihomogeneousForm& f) { return {f.matrix().begin(), f.matrix().end()}; }

// sum weight_k v_k v_k^*
std::vector<GaussianRational> rebuild(const std::vector<kernels::CongruenceTerm>& terms, std::size_t s) {
  std::vector<GaussianRational> out(s * s);
  for (const auto& t : terms)
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j) out[i * s + j] += GaussianRational(t.weight) * t.vec[i] * t.vec[j].conj();
  return out;
}

}  // namespace

TEST_CASE("parallel multiply_once agrees with the serial scatter") {
  std::mt19937_64 rng(1);
  for (std::size_t n = 1; n <= 3; ++n)
    for (unsigned m = 0; m <= 3; ++m) {
      const auto f = random_form(rng, n, m);
      const auto src = basis(n, m), dst = basis(n, m + 1);
      CHECK(kernels::multiply_once(*src, *dst, f.matrix()) == reference::multiply_once(*src, *dst, f.matrix()));
    }
}

TEST_CASE("parallel norm_power agrees with the serial scatter") {
  std::mt19937_64 rng(2);
  for (std::size_t n = 1; n <= 3; ++n)
    for (unsigned m = 0; m <= 2; ++m)
      for (unsigned d = 0; d <= 4; ++d) {
        const auto f = random_form(rng, n, m);
        const auto src = basis(n, m), dst = basis(n, m + d);
        CHECK(kernels::norm_power(*src, *dst, d, f.matrix()) == reference::norm_power(*src, *dst, d, f.matrix()));
      }
}

TEST_CASE("norm_power with d = 1 is multiply_once") {
  std::mt19937_64 rng(3);
  const auto f = random_form(rng, 3, 2);
  const auto src = basis(3, 2), dst = basis(3, 3);
  CHECK(kernels::norm_power(*src, *dst, 1, f.matrix()) == kernels::multiply_once(*src, *dst, f.matrix()));
}

TEST_CASE("product kernel on norm powers") {
  // ||z||^2 * ||z||^4 = ||z||^6
  const auto a = norm_power_form(3, 1), b = norm_power_form(3, 2);
  const auto out = kernels::product(a.basis(), a.matrix(), b.basis(), b.matrix(), *basis(3, 3));
  CHECK(out == dense(norm_power_form(3, 3)));
}

TEST_CASE("both elimination paths agree and reconstruct the matrix") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const unsigned m = 1 + trial % 2;
    const auto f = random_form(rng, n, m);
    for (auto rule : {kernels::PivotRule::none, kernels::PivotRule::symmetric}) {
      const auto k = kernels::eliminate(dense(f), f.size(), rule, true);
      const auto r = reference::eliminate(dense(f), f.size(), rule, true);
      CHECK(k.positive_definite == r.positive_definite);
      CHECK(k.positive == r.positive);
      CHECK(k.negative == r.negative);
      CHECK(k.zero == r.zero);
      REQUIRE(k.terms.size() == r.terms.size());
      for (std::size_t t = 0; t < k.terms.size(); ++t) {
        CHECK(k.terms[t].weight == r.terms[t].weight);
        CHECK(k.terms[t].vec == r.terms[t].vec);
      }
      if (rule == kernels::PivotRule::symmetric) {
        CHECK(k.positive + k.negative + k.zero == f.size());
        CHECK(rebuild(k.terms, f.size()) == dense(f));
      }
    }
  }
}

TEST_CASE("no-pivot elimination of a positive-definite matrix factors it") {
  const auto f = multiply_by_norm_power(p_c(1), 3);
  const auto k = kernels::eliminate(dense(f), f.size(), kernels::PivotRule::none, true);
  CHECK(k.positive_definite);
  CHECK(rebuild(k.terms, f.size()) == dense(f));
}
