#include "hermpos/forms.hpp"

#include "hermpos/kernels.hpp"

#include <sstream>

namespace hermpos {

namespace {

std::string describe(const MultiIndex& a, const MultiIndex& b) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ")";
  return os.str();
}

// Collects entries into a Hermitian map; shared by forms and polynomials.
std::map<CoefficientKey, GaussianRational> hermitian_entries(std::size_t n, const std::vector<FormEntry>& entries) {
  std::map<CoefficientKey, GaussianRational> given;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const FormEntry& e = entries[k];
    if (e.alpha.size() != n || e.beta.size() != n)
      throw InputError("entries[" + std::to_string(k) + "]: multi-index length differs from n=" + std::to_string(n));
    if (!given.emplace(CoefficientKey{e.alpha, e.beta}, e.value).second)
      throw InputError("entries[" + std::to_string(k) + "]: duplicate key " + describe(e.alpha, e.beta));
  }
  std::map<CoefficientKey, GaussianRational> full = given;
  for (const auto& [key, value] : given) {
    const CoefficientKey partner{key.second, key.first};
    if (key.first == key.second) {
      if (!value.is_real())
        throw InputError("diagonal entry " + describe(key.first, key.second) + " is not real");
      continue;
    }
    auto it = given.find(partner);
    if (it == given.end()) {
      full[partner] = value.conj();
    } else if (!(it->second == value.conj())) {
      throw InputError("entries " + describe(key.first, key.second) + " and " +
                       describe(partner.first, partner.second) + " are not conjugate");
    }
  }
  std::erase_if(full, [](const auto& kv) { return kv.second.is_zero(); });
  return full;
}

}  // namespace

// ---------------------------------------------------------------------------
// BihomogeneousForm

BihomogeneousForm::BihomogeneousForm(std::size_t n, unsigned m)
    : basis_(hermpos::basis(n, m)), data_(basis_->size() * basis_->size()) {}

BihomogeneousForm::BihomogeneousForm(std::shared_ptr<const MonomialBasis> b, std::vector<GaussianRational> matrix)
    : basis_(std::move(b)), data_(std::move(matrix)) {
  const std::size_t s = basis_->size();
  if (data_.size() != s * s) throw InputError("form matrix has the wrong size for its basis");
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j)
      if (!(data_[i * s + j] == data_[j * s + i].conj()))
        throw InputError("form matrix is not Hermitian at " + describe((*basis_)[i], (*basis_)[j]));
}

const GaussianRational& BihomogeneousForm::at(const MultiIndex& alpha, const MultiIndex& beta) const {
  return (*this)(basis_->index_of(alpha), basis_->index_of(beta));
}

bool BihomogeneousForm::is_diagonal() const {
  const std::size_t s = size();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (i != j && !data_[i * s + j].is_zero()) return false;
  return true;
}

bool BihomogeneousForm::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

BihomogeneousForm make_form(std::size_t n, unsigned m, const std::vector<FormEntry>& entries) {
  if (n == 0) throw InputError("form dimension must be >= 1");
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (entries[k].alpha.degree() != m || entries[k].beta.degree() != m)
      throw InputError("entries[" + std::to_string(k) + "]: degree differs from m=" + std::to_string(m));
  auto b = basis(n, m);
  std::vector<GaussianRational> data(b->size() * b->size());
  for (const auto& [key, value] : hermitian_entries(n, entries))
    data[b->index_of(key.first) * b->size() + b->index_of(key.second)] = value;
  return BihomogeneousForm(b, std::move(data));
}

BihomogeneousForm norm_power_form(std::size_t n, unsigned m) {
  auto b = basis(n, m);
  std::vector<GaussianRational> data(b->size() * b->size());
  for (std::size_t k = 0; k < b->size(); ++k) data[k * b->size() + k] = Rational(multinomial(m, (*b)[k]));
  return BihomogeneousForm(b, std::move(data));
}

Rational evaluate(const BihomogeneousForm& form, const Point& z) {
  if (z.size() != form.n()) throw InputError("evaluation point dimension differs from form dimension");
  const std::size_t s = form.size();
  std::vector<GaussianRational> w(s);
  for (std::size_t k = 0; k < s; ++k) w[k] = monomial_value(z, form.basis()[k]);
  GaussianRational total;
  for (std::size_t i = 0; i < s; ++i) {
    GaussianRational row;
    for (std::size_t j = 0; j < s; ++j) row.add_product(form(i, j), w[j].conj());
    total.add_product(w[i], row);
  }
  if (!total.is_real()) throw std::logic_error("Hermitian form evaluated to a non-real value");
  return total.re;
}

namespace {

BihomogeneousForm combine(const BihomogeneousForm& a, const BihomogeneousForm& b, bool subtract) {
  if (a.n() != b.n() || a.m() != b.m()) throw InputError("forms have different shapes");
  std::vector<GaussianRational> data(a.matrix().begin(), a.matrix().end());
  for (std::size_t k = 0; k < data.size(); ++k) {
    if (subtract)
      data[k] -= b.matrix()[k];
    else
      data[k] += b.matrix()[k];
  }
  return BihomogeneousForm(a.basis_ptr(), std::move(data));
}

}  // namespace

BihomogeneousForm operator+(const BihomogeneousForm& a, const BihomogeneousForm& b) { return combine(a, b, false); }
BihomogeneousForm operator-(const BihomogeneousForm& a, const BihomogeneousForm& b) { return combine(a, b, true); }

BihomogeneousForm scaled(const BihomogeneousForm& a, const Rational& s) {
  std::vector<GaussianRational> data(a.matrix().begin(), a.matrix().end());
  for (auto& v : data) v *= s;
  return BihomogeneousForm(a.basis_ptr(), std::move(data));
}

BihomogeneousForm multiply(const BihomogeneousForm& a, const BihomogeneousForm& b) {
  if (a.n() != b.n()) throw InputError("forms live on different dimensions");
  auto dst = basis(a.n(), a.m() + b.m());
  return BihomogeneousForm(dst, kernels::product(a.basis(), a.matrix(), b.basis(), b.matrix(), *dst));
}

// ---------------------------------------------------------------------------
// HermitianPolynomial

HermitianPolynomial::HermitianPolynomial(std::size_t n, const std::vector<FormEntry>& entries)
    : HermitianPolynomial(n) {
  terms_ = hermitian_entries(n, entries);
}

HermitianPolynomial HermitianPolynomial::from_form(const BihomogeneousForm& form) {
  HermitianPolynomial p(form.n());
  for (std::size_t i = 0; i < form.size(); ++i)
    for (std::size_t j = 0; j < form.size(); ++j)
      if (!form(i, j).is_zero()) p.terms_[{form.basis()[i], form.basis()[j]}] = form(i, j);
  return p;
}

unsigned HermitianPolynomial::degree() const {
  unsigned m = 0;
  for (const auto& [key, value] : terms_) m = std::max({m, key.first.degree(), key.second.degree()});
  return m;
}

bool HermitianPolynomial::is_bihomogeneous() const {
  const unsigned m = degree();
  for (const auto& [key, value] : terms_)
    if (key.first.degree() != m || key.second.degree() != m) return false;
  return true;
}

GaussianRational HermitianPolynomial::coefficient(const MultiIndex& alpha, const MultiIndex& beta) const {
  auto it = terms_.find({alpha, beta});
  return it == terms_.end() ? GaussianRational() : it->second;
}

BihomogeneousForm HermitianPolynomial::to_form(unsigned m) const {
  auto b = basis(n_, m);
  std::vector<GaussianRational> data(b->size() * b->size());
  for (const auto& [key, value] : terms_) {
    if (key.first.degree() != m || key.second.degree() != m)
      throw InputError("polynomial is not bihomogeneous of degree " + std::to_string(m));
    data[b->index_of(key.first) * b->size() + b->index_of(key.second)] = value;
  }
  return BihomogeneousForm(b, std::move(data));
}

void HermitianPolynomial::add_raw(const MultiIndex& alpha, const MultiIndex& beta, const GaussianRational& value) {
  if (alpha.size() != n_ || beta.size() != n_) throw InputError("multi-index length differs from n");
  if (value.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({alpha, beta}, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HermitianPolynomial& HermitianPolynomial::operator+=(const HermitianPolynomial& o) {
  if (o.n_ != n_) throw InputError("polynomials live on different dimensions");
  for (const auto& [key, value] : o.terms_) add_raw(key.first, key.second, value);
  return *this;
}

HermitianPolynomial& HermitianPolynomial::operator-=(const HermitianPolynomial& o) {
  if (o.n_ != n_) throw InputError("polynomials live on different dimensions");
  for (const auto& [key, value] : o.terms_) add_raw(key.first, key.second, -value);
  return *this;
}

Rational evaluate_poly(const HermitianPolynomial& f, const Point& z) {
  if (z.size() != f.n()) throw InputError("evaluation point dimension differs from polynomial dimension");
  GaussianRational total;
  for (const auto& [key, value] : f.terms()) {
    GaussianRational term = value * monomial_value(z, key.first);
    term *= monomial_value(z, key.second).conj();
    total += term;
  }
  if (!total.is_real()) throw std::logic_error("Hermitian polynomial evaluated to a non-real value");
  return total.re;
}

HermitianPolynomial times_norm_squared(const HermitianPolynomial& f) {
  HermitianPolynomial out(f.n());
  for (const auto& [key, value] : f.terms())
    for (std::size_t j = 0; j < f.n(); ++j) {
      const MultiIndex ej = MultiIndex::unit(f.n(), j);
      out.add_raw(key.first + ej, key.second + ej, value);
    }
  return out;
}

BihomogeneousForm homogenize(const HermitianPolynomial& f, unsigned m) {
  auto b = basis(f.n() + 1, m);
  std::vector<GaussianRational> data(b->size() * b->size());
  for (const auto& [key, value] : f.terms()) {
    const unsigned da = key.first.degree(), db = key.second.degree();
    if (da > m || db > m) throw InputError("homogenize: polynomial degree exceeds m");
    const MultiIndex a = key.first.extended(m - da);
    const MultiIndex c = key.second.extended(m - db);
    data[b->index_of(a) * b->size() + b->index_of(c)] = value;
  }
  return BihomogeneousForm(b, std::move(data));
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::size_t n, std::map<MultiIndex, GaussianRational> terms) : n_(n) {
  for (auto& [alpha, c] : terms) add_term(alpha, c);
}

Polynomial Polynomial::constant(std::size_t n, GaussianRational c) {
  Polynomial p(n);
  p.add_term(MultiIndex(n), c);
  return p;
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.degree());
  return d;
}

unsigned Polynomial::low_degree() const {
  if (terms_.empty()) return 0;
  unsigned d = terms_.begin()->first.degree();
  for (const auto& [alpha, c] : terms_) d = std::min(d, alpha.degree());
  return d;
}

GaussianRational Polynomial::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void Polynomial::add_term(const MultiIndex& alpha, const GaussianRational& c) {
  if (alpha.size() != n_) throw InputError("monomial length differs from polynomial dimension");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw InputError("polynomials live on different dimensions");
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.n_ != n_) throw InputError("polynomials live on different dimensions");
  for (const auto& [alpha, c] : o.terms_) add_term(alpha, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw InputError("polynomials live on different dimensions");
  Polynomial r(a.n_);
  for (const auto& [x, cx] : a.terms_)
    for (const auto& [y, cy] : b.terms_) r.add_term(x + y, cx * cy);
  return r;
}

Polynomial operator*(const GaussianRational& s, const Polynomial& p) {
  Polynomial r(p.n_);
  for (const auto& [alpha, c] : p.terms_) r.add_term(alpha, s * c);
  return r;
}

Polynomial Polynomial::homogeneous_part(unsigned k) const {
  Polynomial r(n_);
  for (const auto& [alpha, c] : terms_)
    if (alpha.degree() == k) r.terms_.emplace(alpha, c);
  return r;
}

GaussianRational Polynomial::evaluate(const Point& z) const {
  GaussianRational v;
  for (const auto& [alpha, c] : terms_) v.add_product(c, monomial_value(z, alpha));
  return v;
}

std::complex<double> Polynomial::evaluate(const ComplexPoint& z) const {
  if (z.size() != n_) throw InputError("evaluation point dimension differs from polynomial dimension");
  std::complex<double> v = 0;
  for (const auto& [alpha, c] : terms_) {
    std::complex<double> mono = 1;
    for (std::size_t j = 0; j < n_; ++j)
      for (unsigned e = 0; e < alpha[j]; ++e) mono *= z[j];
    v += std::complex<double>(c.re.get_d(), c.im.get_d()) * mono;
  }
  return v;
}

std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.n() != b.n()) throw InputError("polynomials live on different dimensions");
  auto leading = [](const Polynomial& p) {
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
      if (graded_lex_before(best->first, it->first)) best = it;
    return *best;
  };
  const auto [lead_b, lead_c] = leading(b);
  Polynomial quotient(a.n()), remainder(a.n()), rest = a;
  while (!rest.is_zero()) {
    const auto [mono, coeff] = leading(rest);
    if (auto shift = sub_checked(mono, lead_b)) {
      Polynomial step(a.n());
      step.add_term(*shift, coeff / lead_c);
      quotient += step;
      rest -= step * b;
    } else {
      Polynomial lt(a.n());
      lt.add_term(mono, coeff);
      remainder += lt;
      rest -= lt;
    }
  }
  return {quotient, remainder};
}

// ---------------------------------------------------------------------------
// HoloPolyMap

void HoloPolyMap::push_back(Rational scale, Polynomial poly) {
  if (sgn(scale) <= 0) throw InputError("map component scale must be positive");
  if (poly.n() != n_) throw InputError("map component dimension differs from map dimension");
  components_.push_back({std::move(scale), std::move(poly)});
}

unsigned HoloPolyMap::degree() const {
  unsigned d = 0;
  for (const auto& c : components_) d = std::max(d, c.poly.degree());
  return d;
}

bool HoloPolyMap::is_homogeneous(unsigned m) const {
  for (const auto& c : components_)
    for (const auto& [alpha, coeff] : c.poly.terms())
      if (alpha.degree() != m) return false;
  return true;
}

Rational HoloPolyMap::squared_norm(const Point& z) const {
  Rational total;
  for (const auto& c : components_) total += c.scale * c.poly.evaluate(z).norm2();
  return total;
}

double HoloPolyMap::squared_norm(const ComplexPoint& z) const {
  double total = 0;
  for (const auto& c : components_) total += c.scale.get_d() * std::norm(c.poly.evaluate(z));
  return total;
}

ComplexPoint HoloPolyMap::evaluate(const ComplexPoint& z) const {
  ComplexPoint out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(std::sqrt(c.scale.get_d()) * c.poly.evaluate(z));
  return out;
}

HermitianPolynomial HoloPolyMap::squared_norm_poly() const {
  HermitianPolynomial out(n_);
  for (const auto& c : components_)
    for (const auto& [alpha, a] : c.poly.terms())
      for (const auto& [beta, b] : c.poly.terms()) {
        GaussianRational v = a * b.conj();
        v *= c.scale;
        out.add_raw(alpha, beta, v);
      }
  return out;
}

BihomogeneousForm HoloPolyMap::squared_norm_form(unsigned m) const {
  if (!is_homogeneous(m)) throw InputError("map is not homogeneous of degree " + std::to_string(m));
  auto b = basis(n_, m);
  const std::size_t s = b->size();
  std::vector<GaussianRational> data(s * s);
  for (const auto& c : components_) {
    std::vector<std::pair<std::size_t, GaussianRational>> entries;
    for (const auto& [alpha, a] : c.poly.terms()) entries.emplace_back(b->index_of(alpha), a);
    for (const auto& [i, a] : entries)
      for (const auto& [j, bb] : entries) {
        GaussianRational v = a * bb.conj();
        v *= c.scale;
        data[i * s + j] += v;
      }
  }
  return BihomogeneousForm(b, std::move(data));
}

HoloPolyMap direct_sum(const HoloPolyMap& g, const HoloPolyMap& h) {
  if (g.n() != h.n()) throw InputError("direct sum of maps on different dimensions");
  HoloPolyMap out = g;
  for (const auto& c : h.components()) out.push_back(c.scale, c.poly);
  return out;
}

// ---------------------------------------------------------------------------
// Signature

std::ostream& operator<<(std::ostream& os, const InertiaTriple& t) {
  return os << "(" << t.positive << ", " << t.negative << ", " << t.zero << ")";
}

InertiaTriple inertia(const BihomogeneousForm& form) {
  auto r = kernels::eliminate({form.matrix().begin(), form.matrix().end()}, form.size(),
                              kernels::PivotRule::symmetric, false);
  return {r.positive, r.negative, r.zero};
}

bool is_positive_definite(const BihomogeneousForm& form) {
  return kernels::eliminate({form.matrix().begin(), form.matrix().end()}, form.size(), kernels::PivotRule::none,
                            false)
      .positive_definite;
}

namespace {

Polynomial term_polynomial(const MonomialBasis& b, const std::vector<GaussianRational>& vec) {
  Polynomial p(b.n());
  for (std::size_t k = 0; k < vec.size(); ++k) p.add_term(b[k], vec[k]);
  return p;
}

}  // namespace

PNDecomposition decompose_PN(const BihomogeneousForm& form) {
  auto r = kernels::eliminate({form.matrix().begin(), form.matrix().end()}, form.size(),
                              kernels::PivotRule::symmetric, true);
  PNDecomposition out{HoloPolyMap(form.n()), HoloPolyMap(form.n())};
  for (auto& term : r.terms) {
    Polynomial poly = term_polynomial(form.basis(), term.vec);
    if (sgn(term.weight) > 0)
      out.positive.push_back(term.weight, std::move(poly));
    else
      out.negative.push_back(-term.weight, std::move(poly));
  }
  return out;
}

}  // namespace hermpos
