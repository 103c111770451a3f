#include "hermpos/core.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace hermpos {

bool MultiIndex::divides(const MultiIndex& other) const {
  if (size() != other.size()) throw InputError("multi-index length mismatch");
  for (std::size_t j = 0; j < size(); ++j)
    if (exps_[j] > other.exps_[j]) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (size() != other.size()) throw InputError("multi-index length mismatch");
  MultiIndex r = *this;
  for (std::size_t j = 0; j < size(); ++j) r.exps_[j] += other.exps_[j];
  return r;
}

std::ostream& operator<<(std::ostream& os, const MultiIndex& a) {
  os << '(';
  for (std::size_t j = 0; j < a.size(); ++j) os << (j ? "," : "") << a[j];
  return os << ')';
}

bool graded_lex_before(const MultiIndex& a, const MultiIndex& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Larger leading exponent first.
  return a > b;
}

std::optional<MultiIndex> sub_checked(const MultiIndex& mu, const MultiIndex& alpha) {
  if (mu.size() != alpha.size()) throw InputError("sub_checked: multi-index length mismatch");
  MultiIndex r(mu.size());
  for (std::size_t j = 0; j < mu.size(); ++j) {
    if (alpha[j] > mu[j]) return std::nullopt;
    r[j] = mu[j] - alpha[j];
  }
  return r;
}

Integer factorial(unsigned k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

Integer multi_factorial(const MultiIndex& alpha) {
  Integer r = 1;
  for (unsigned e : alpha.exponents()) r *= factorial(e);
  return r;
}

Integer multinomial(unsigned d, const MultiIndex& gamma) {
  if (gamma.degree() != d) throw InputError("multinomial: |gamma| differs from d");
  Integer r = factorial(d);
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), multi_factorial(gamma).get_mpz_t());
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::pair<Integer, Integer> falling_factorial_identity_check(const MultiIndex& mu, const MultiIndex& alpha) {
  auto diff = sub_checked(mu, alpha);
  if (!diff) throw InputError("falling_factorial_identity_check: requires mu >= alpha");
  Integer quotient = multi_factorial(mu);
  mpz_divexact(quotient.get_mpz_t(), quotient.get_mpz_t(), multi_factorial(*diff).get_mpz_t());
  Integer falling = 1;
  for (std::size_t j = 0; j < mu.size(); ++j)
    for (unsigned i = 0; i < alpha[j]; ++i) falling *= static_cast<unsigned long>(mu[j] - i);
  return {quotient, falling};
}

// ---------------------------------------------------------------------------

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InputError("empty rational string");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw InputError("malformed rational \"" + text + "\"");
  }
  std::string s = text;
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw InputError("malformed rational \"" + text + "\"");
  if (sgn(q.get_den()) == 0) throw InputError("zero denominator in \"" + text + "\"");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rationalize(double x, long max_den) {
  if (!std::isfinite(x)) throw InputError("cannot rationalize a non-finite value");
  // Continued-fraction convergents of the exact binary value of x.
  Rational exact(x);
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Integer num = exact.get_num(), den = exact.get_den();
  while (sgn(den) != 0) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer q2 = a * q1 + q0;
    if (q2 > max_den) break;
    Integer p2 = a * p1 + p0;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    Integer r = num - a * den;
    num = den;
    den = r;
  }
  if (sgn(q1) == 0) return exact;
  Rational r(p1, q1);
  r.canonicalize();
  return r;
}

Rational rationalize_down(double x, long max_den) {
  Rational exact(x);
  Integer scaled_num = exact.get_num() * max_den;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), scaled_num.get_mpz_t(), exact.get_den().get_mpz_t());
  Rational r(fl, max_den);
  r.canonicalize();
  return r;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussianRational division by zero");
  if (o.is_real()) {
    re /= o.re;
    if (sgn(im) != 0) im /= o.re;
    return *this;
  }
  Rational n2 = o.norm2();
  *this *= o.conj();
  re /= n2;
  im /= n2;
  return *this;
}

void GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_real() && b.is_real()) {
    re += a.re * b.re;
    return;
  }
  *this += a * b;
}

void GaussianRational::sub_product(const GaussianRational& a, const GaussianRational& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_real() && b.is_real()) {
    re -= a.re * b.re;
    return;
  }
  *this -= a * b;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  os << x.re.get_str();
  if (!x.is_real()) os << (sgn(x.im) < 0 ? " - " : " + ") << Rational(abs(x.im)).get_str() << "i";
  return os;
}

GaussianRational monomial_value(const std::vector<GaussianRational>& z, const MultiIndex& alpha) {
  if (z.size() != alpha.size()) throw InputError("point dimension differs from multi-index length");
  GaussianRational v(1);
  for (std::size_t j = 0; j < z.size(); ++j)
    for (unsigned k = 0; k < alpha[j]; ++k) v *= z[j];
  return v;
}

// ---------------------------------------------------------------------------

namespace {

void enumerate_rec(std::size_t n, unsigned remaining, MultiIndex& cur, std::size_t pos,
                   std::vector<MultiIndex>& out) {
  if (pos + 1 == n) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[pos] = e;
    enumerate_rec(n, remaining - e, cur, pos + 1, out);
  }
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t n, unsigned m) : n_(n), m_(m) {
  if (n == 0) throw InputError("monomial basis requires n >= 1");
  MultiIndex cur(n);
  enumerate_rec(n, m, cur, 0, indices_);
  lookup_.reserve(indices_.size());
  for (std::size_t k = 0; k < indices_.size(); ++k) lookup_.emplace(indices_[k], k);
}

std::optional<std::size_t> MonomialBasis::find(const MultiIndex& alpha) const {
  auto it = lookup_.find(alpha);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t MonomialBasis::index_of(const MultiIndex& alpha) const {
  auto k = find(alpha);
  if (!k) {
    std::ostringstream os;
    os << "multi-index " << alpha << " is not in the basis (n=" << n_ << ", m=" << m_ << ")";
    throw InputError(os.str());
  }
  return *k;
}

std::shared_ptr<const MonomialBasis> basis(std::size_t n, unsigned m) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, unsigned>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, m}];
  if (!slot) slot = std::make_shared<const MonomialBasis>(n, m);
  return slot;
}

}  // namespace hermpos
