#include "hermpos/io.hpp"

#include <fstream>
#include <sstream>

namespace hermpos::io {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(where + ": missing field \"" + key + "\"");
  return *it;
}

std::size_t positive_int(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw InputError(where + ": expected a positive integer");
  return j.get<std::size_t>();
}

unsigned non_negative_int(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(where + ": expected a non-negative integer");
  return j.get<unsigned>();
}

void check_version(const json& j) {
  if (!j.is_object()) throw InputError("document: expected a JSON object");
  auto it = j.find("format_version");
  if (it != j.end() && *it != kFormatVersion)
    throw InputError("format_version: unsupported version " + it->dump());
}

json with_version(json j) {
  j["format_version"] = kFormatVersion;
  return j;
}

std::vector<FormEntry> entries_from_json(const json& j, std::size_t n) {
  const json& arr = field(j, "entries", "document");
  if (!arr.is_array()) throw InputError("entries: expected an array");
  std::vector<FormEntry> entries;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string where = "entries[" + std::to_string(k) + "]";
    const json& e = arr[k];
    FormEntry entry{multi_index_from_json(field(e, "alpha", where), where + ".alpha"),
                    multi_index_from_json(field(e, "beta", where), where + ".beta"),
                    gaussian_from_json(e, where)};
    if (entry.alpha.size() != n || entry.beta.size() != n)
      throw InputError(where + ": multi-index length differs from n=" + std::to_string(n));
    entries.push_back(std::move(entry));
  }
  return entries;
}

json entry_json(const MultiIndex& a, const MultiIndex& b, const GaussianRational& v) {
  return {{"alpha", to_json(a)}, {"beta", to_json(b)}, {"re", to_json(v.re)}, {"im", to_json(v.im)}};
}

}  // namespace

json to_json(const MultiIndex& a) { return json(a.exponents()); }
json to_json(const Rational& q) { return format_rational(q); }
json to_json(const GaussianRational& x) { return {{"re", to_json(x.re)}, {"im", to_json(x.im)}}; }

MultiIndex multi_index_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of non-negative integers");
  std::vector<unsigned> exps;
  for (std::size_t k = 0; k < j.size(); ++k) exps.push_back(non_negative_int(j[k], where + "[" + std::to_string(k) + "]"));
  return MultiIndex(std::move(exps));
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError(where + ": expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

GaussianRational gaussian_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected {\"re\", \"im\"}");
  GaussianRational x;
  if (auto it = j.find("re"); it != j.end()) x.re = rational_from_json(*it, where + ".re");
  if (auto it = j.find("im"); it != j.end()) x.im = rational_from_json(*it, where + ".im");
  return x;
}

// ---------------------------------------------------------------------------

json form_to_json(const BihomogeneousForm& form) {
  json entries = json::array();
  for (std::size_t i = 0; i < form.size(); ++i)
    for (std::size_t j = i; j < form.size(); ++j)
      if (!form(i, j).is_zero()) entries.push_back(entry_json(form.basis()[i], form.basis()[j], form(i, j)));
  return with_version({{"n", form.n()}, {"m", form.m()}, {"entries", entries}});
}

BihomogeneousForm form_from_json(const json& j) {
  check_version(j);
  const std::size_t n = positive_int(field(j, "n", "document"), "n");
  const unsigned m = non_negative_int(field(j, "m", "document"), "m");
  return make_form(n, m, entries_from_json(j, n));
}

json polynomial_to_json(const HermitianPolynomial& f) {
  json entries = json::array();
  for (const auto& [key, value] : f.terms())
    if (!(key.second < key.first)) entries.push_back(entry_json(key.first, key.second, value));
  return with_version({{"n", f.n()}, {"m", f.degree()}, {"entries", entries}});
}

HermitianPolynomial polynomial_from_json(const json& j) {
  check_version(j);
  const std::size_t n = positive_int(field(j, "n", "document"), "n");
  HermitianPolynomial f(n, entries_from_json(j, n));
  if (auto it = j.find("m"); it != j.end()) {
    const unsigned m = non_negative_int(*it, "m");
    if (f.degree() > m) throw InputError("m: entries exceed the declared degree " + std::to_string(m));
  }
  return f;
}

json terms_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [alpha, c] : p.terms())
    terms.push_back({{"alpha", to_json(alpha)}, {"re", to_json(c.re)}, {"im", to_json(c.im)}});
  return terms;
}

Polynomial terms_from_json(std::size_t n, const json& terms, const std::string& where) {
  if (!terms.is_array()) throw InputError(where + ": expected an array");
  Polynomial p(n);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string w = where + "[" + std::to_string(k) + "]";
    MultiIndex alpha = multi_index_from_json(field(terms[k], "alpha", w), w + ".alpha");
    if (alpha.size() != n) throw InputError(w + ".alpha: length differs from n=" + std::to_string(n));
    if (!p.coefficient(alpha).is_zero()) throw InputError(w + ": duplicate monomial");
    p.add_term(alpha, gaussian_from_json(terms[k], w));
  }
  return p;
}

json map_to_json(const HoloPolyMap& map) {
  json comps = json::array();
  for (const auto& c : map.components()) comps.push_back({{"scale", to_json(c.scale)}, {"terms", terms_to_json(c.poly)}});
  return with_version({{"n", map.n()}, {"components", comps}});
}

HoloPolyMap map_from_json(const json& j) {
  check_version(j);
  const std::size_t n = positive_int(field(j, "n", "document"), "n");
  const json& comps = field(j, "components", "document");
  if (!comps.is_array()) throw InputError("components: expected an array");
  HoloPolyMap map(n);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const std::string where = "components[" + std::to_string(k) + "]";
    Rational scale = 1;
    if (auto it = comps[k].find("scale"); it != comps[k].end()) scale = rational_from_json(*it, where + ".scale");
    if (sgn(scale) <= 0) throw InputError(where + ".scale: must be positive");
    map.push_back(scale, terms_from_json(n, field(comps[k], "terms", where), where + ".terms"));
  }
  return map;
}

json real_polynomial_to_json(const RealPolynomial& p) {
  json terms = json::array();
  for (const auto& [alpha, c] : p.terms()) terms.push_back({{"alpha", to_json(alpha)}, {"coeff", to_json(c)}});
  return with_version({{"n", p.n()}, {"m", p.degree()}, {"terms", terms}});
}

RealPolynomial real_polynomial_from_json(const json& j) {
  check_version(j);
  const std::size_t n = positive_int(field(j, "n", "document"), "n");
  const unsigned m = non_negative_int(field(j, "m", "document"), "m");
  const json& terms = field(j, "terms", "document");
  if (!terms.is_array()) throw InputError("terms: expected an array");
  RealPolynomial p(n, m);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string where = "terms[" + std::to_string(k) + "]";
    MultiIndex alpha = multi_index_from_json(field(terms[k], "alpha", where), where + ".alpha");
    if (alpha.size() != n) throw InputError(where + ".alpha: length differs from n=" + std::to_string(n));
    if (alpha.degree() != m) throw InputError(where + ".alpha: degree differs from m=" + std::to_string(m));
    if (sgn(p.coefficient(alpha)) != 0) throw InputError(where + ": duplicate monomial");
    p.add_term(alpha, rational_from_json(field(terms[k], "coeff", where), where + ".coeff"));
  }
  return p;
}

// ---------------------------------------------------------------------------

json complex_point_to_json(const ComplexPoint& z) {
  json arr = json::array();
  for (const auto& v : z) arr.push_back({v.real(), v.imag()});
  return arr;
}

ComplexPoint complex_point_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of [re, im] pairs");
  ComplexPoint z;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const json& v = j[k];
    if (v.is_number()) {
      z.emplace_back(v.get<double>(), 0.0);
    } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      z.emplace_back(v[0].get<double>(), v[1].get<double>());
    } else {
      throw InputError(where + "[" + std::to_string(k) + "]: expected a number or [re, im]");
    }
  }
  return z;
}

json matrix_to_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(row);
  }
  return rows;
}

json certificate_to_json(const StabilizationCertificate& cert) {
  return with_version({{"d_min", cert.d_min},
                       {"stabilized_form", form_to_json(cert.stabilized)},
                       {"factor", map_to_json(cert.factor)},
                       {"minimality_checked", cert.minimality_checked}});
}

json witness_to_json(const NegativeWitness& w) {
  json exact = json::array();
  for (const auto& v : w.exact_point) exact.push_back(to_json(v));
  return with_version({{"point", complex_point_to_json(w.point)},
                       {"value", w.value},
                       {"exact_confirmation", {{"point", exact}, {"value", to_json(w.exact_value)}}}});
}

json witness_to_json(const SphereMinimum& w) {
  return with_version({{"point", complex_point_to_json(w.witness)}, {"value", w.value}});
}

json simplex_witness_to_json(const SimplexWitness& w) {
  json exact = json::array();
  for (const auto& v : w.exact_point) exact.push_back(to_json(v));
  return with_version({{"point", w.point},
                       {"value", w.value},
                       {"exact_confirmation", {{"point", exact}, {"value", to_json(w.exact_value)}}}});
}

json polya_certificate_to_json(const PolyaCertificate& cert) {
  json coeffs = json::array();
  for (const auto& [mu, c] : cert.coefficients) coeffs.push_back({{"alpha", to_json(mu)}, {"coeff", to_json(c)}});
  return with_version({{"d_min", cert.d_min}, {"coefficients", coeffs}});
}

json rational_map_to_json(const RationalMap& map) {
  json num = map_to_json(map.numerator);
  num.erase("format_version");
  return with_version(
      {{"numerator", num}, {"denominator", {{"terms", terms_to_json(map.denominator)}}}, {"lowest_terms", map.lowest_terms}});
}

RationalMap rational_map_from_json(const json& j) {
  check_version(j);
  HoloPolyMap num = map_from_json(field(j, "numerator", "document"));
  const json& den = field(j, "denominator", "document");
  Polynomial d = terms_from_json(num.n(), field(den, "terms", "denominator"), "denominator.terms");
  if (d.is_zero()) throw InputError("denominator: must be non-zero");
  bool lowest = false;
  if (auto it = j.find("lowest_terms"); it != j.end()) {
    if (!it->is_boolean()) throw InputError("lowest_terms: expected a boolean");
    lowest = it->get<bool>();
  }
  return {std::move(num), std::move(d), lowest};
}

json report_to_json(const ProperReport& r) {
  return with_version({{"samples", r.samples}, {"seed", r.seed}, {"max_deviation", r.max_deviation}, {"pass", r.pass}});
}

// ---------------------------------------------------------------------------

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    // nlohmann reports "line L, column C" in the message.
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_json_atomic(const std::filesystem::path& path, const json& j) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error(tmp.string() + ": cannot open for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error(tmp.string() + ": write failed");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hermpos::io
