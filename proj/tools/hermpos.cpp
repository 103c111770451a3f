// hermpos: exact positivity certificates for Hermitian forms and proper ball maps.
//
// Exit codes: 0 positive result, 1 input error, 2 disproof, 3 inconclusive.

#include "hermpos/io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <variant>

using namespace hermpos;
using io::json;

namespace {

enum Exit { kOk = 0, kInput = 1, kDisproof = 2, kInconclusive = 3 };

struct Options {
  std::string input;
  std::string output;
  unsigned d_max = 64;
  std::size_t samples = 10000;
  std::size_t refine_iters = 200;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  bool allow_zero = false;
  unsigned max_degree_m = 1;
  unsigned big_n = 2;
  unsigned d = 0;
  std::string point;
};

DisproverConfig disprover(const Options& o) {
  DisproverConfig cfg;
  cfg.search.samples = o.samples;
  cfg.search.refine_iters = o.refine_iters;
  cfg.search.seed = o.seed;
  cfg.threshold = o.tol;
  cfg.allow_zero = o.allow_zero;
  return cfg;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

SphereSearchOptions search(const Options& o) { return disprover(o).search; }

// Without --output the document goes to stdout and the summary to stderr.
void emit(const Options& o, const json& doc, const std::string& summary) {
  if (o.output.empty()) {
    std::cout << doc.dump(2) << '\n';
    std::cerr << summary << '\n';
  } else {
    io::write_json_atomic(o.output, doc);
    std::cout << summary << '\n';
  }
}

json tagged(const char* result, json body) {
  body["result"] = result;
  body["format_version"] = io::kFormatVersion;
  return body;
}

int report_construction_error(const Options& o, const ConstructionError& e) {
  if (e.is_disproof()) {
    emit(o, tagged("disproof", {{"witness", io::witness_to_json(*e.witness())}, {"message", e.what()}}), e.what());
    return kDisproof;
  }
  emit(o, tagged("inconclusive", {{"message", e.what()}}), e.what());
  return kInconclusive;
}

// ---------------------------------------------------------------------------

int run_stabilize(const Options& o) {
  const BihomogeneousForm form = io::form_from_json(io::read_json(o.input));
  const StabilizationResult r = stabilize(form, o.d_max, disprover(o));
  if (auto* cert = std::get_if<StabilizationCertificate>(&r)) {
    emit(o, tagged("certificate", io::certificate_to_json(*cert)),
         "positive definite at d_min = " + std::to_string(cert->d_min) + " (" + std::to_string(cert->factor.size()) +
             " factor components)");
    return kOk;
  }
  if (auto* w = std::get_if<NegativeWitness>(&r)) {
    emit(o, tagged("disproof", {{"witness", io::witness_to_json(*w)}}),
         "witness found: f = " + format_rational(w->exact_value) + " at a rational sphere-line point");
    return kDisproof;
  }
  const auto& ns = std::get<NotStabilized>(r);
  emit(o, tagged("inconclusive", {{"d_max", ns.d_max}, {"sphere_estimate", ns.sphere_estimate}}),
       "no positive-definite stabilization up to d_max = " + std::to_string(ns.d_max) +
           "; sampled sphere minimum " + std::to_string(ns.sphere_estimate));
  return kInconclusive;
}

int run_check_pd(const Options& o) {
  const BihomogeneousForm form = io::form_from_json(io::read_json(o.input));
  const bool pd = is_positive_definite(form);
  emit(o, tagged("check-pd", {{"positive_definite", pd}}), pd ? "positive definite" : "not positive definite");
  return kOk;
}

int run_inertia(const Options& o) {
  const BihomogeneousForm form = io::form_from_json(io::read_json(o.input));
  const InertiaTriple t = inertia(form);
  std::ostringstream s;
  s << "inertia " << t;
  emit(o, tagged("inertia", {{"positive", t.positive}, {"negative", t.negative}, {"zero", t.zero}}), s.str());
  return kOk;
}

int run_factor(const Options& o) {
  const BihomogeneousForm form = io::form_from_json(io::read_json(o.input));
  const HoloPolyMap g = holomorphic_factor(form);
  emit(o, io::map_to_json(g), "factor with " + std::to_string(g.size()) + " components");
  return kOk;
}

int run_polya(const Options& o) {
  const RealPolynomial p = io::real_polynomial_from_json(io::read_json(o.input));
  const PolyaResult r = polya_stabilize(p, o.d_max, disprover(o));
  if (auto* cert = std::get_if<PolyaCertificate>(&r)) {
    emit(o, tagged("certificate", io::polya_certificate_to_json(*cert)),
         "all coefficients positive at d_min = " + std::to_string(cert->d_min));
    return kOk;
  }
  if (auto* w = std::get_if<SimplexWitness>(&r)) {
    emit(o, tagged("disproof", {{"witness", io::simplex_witness_to_json(*w)}}),
         "witness found: p = " + format_rational(w->exact_value) + " on the simplex");
    return kDisproof;
  }
  const auto& ns = std::get<NotStabilized>(r);
  emit(o, tagged("inconclusive", {{"d_max", ns.d_max}, {"sphere_estimate", ns.sphere_estimate}}),
       "no positive coefficients up to d_max = " + std::to_string(ns.d_max));
  return kInconclusive;
}

int run_min_sphere(const Options& o) {
  const HermitianPolynomial f = io::polynomial_from_json(io::read_json(o.input));
  const SphereMinimum m = min_sphere_estimate(f, search(o));
  emit(o, tagged("min-sphere", io::witness_to_json(m)), "sampled sphere minimum " + std::to_string(m.value));
  return kOk;
}

int run_complete(const Options& o) {
  const HoloPolyMap p = io::map_from_json(io::read_json(o.input));
  const unsigned m = p.degree();
  json doc;
  std::string summary;
  if (m > 0 && p.is_homogeneous(m)) {
    const HomogeneousCompletion c = complete_homogeneous(p, o.d_max, disprover(o));
    doc = io::map_to_json(c.sphere_map);
    doc["d"] = c.d;
    doc["homogeneous_map"] = io::map_to_json(c.homogeneous_map);
    doc["homogeneous_map"].erase("format_version");
    summary = "homogeneous completion at d = " + std::to_string(c.d) + " with " +
              std::to_string(c.sphere_map.size()) + " components";
  } else {
    const HoloPolyMap f = complete_general(p, o.d_max, disprover(o));
    doc = io::map_to_json(f);
    summary = "completion with " + std::to_string(f.size()) + " components";
  }
  emit(o, doc, summary);
  return kOk;
}

int run_snr(const Options& o) {
  const HermitianPolynomial f = io::polynomial_from_json(io::read_json(o.input));
  const SquaredNormRepresentation r = squared_norm_representation(f, o.d_max, disprover(o));
  json g = io::map_to_json(r.g);
  g.erase("format_version");
  emit(o, tagged("certificate", {{"g", g}, {"c", io::to_json(r.c)}, {"d", r.d}, {"m", r.m}}),
       "squared-norm representation with " + std::to_string(r.g.size()) + " components (C = " +
           format_rational(r.c) + ", d = " + std::to_string(r.d) + ")");
  return kOk;
}

int run_denominator(const Options& o) {
  const json in = io::read_json(o.input);
  if (!in.is_object() || !in.contains("n") || !in.contains("terms"))
    throw InputError("document: expected {\"n\", \"terms\"}");
  if (!in["n"].is_number_integer() || in["n"].get<long long>() < 1) throw InputError("n: expected a positive integer");
  const Polynomial q = io::terms_from_json(in["n"].get<std::size_t>(), in["terms"], "terms");
  const DenominatorResult r = denominator_map(q, o.d_max, disprover(o));
  json doc = io::rational_map_to_json(r.map);
  doc["epsilon"] = io::to_json(r.epsilon);
  doc["sup_estimate"] = r.sup_estimate;
  emit(o, doc,
       "rational map with " + std::to_string(r.map.numerator.size()) + " components, epsilon = " +
           format_rational(r.epsilon) + (r.map.lowest_terms ? ", lowest terms" : ", NOT in lowest terms"));
  return kOk;
}

int run_verify(const Options& o) {
  const json in = io::read_json(o.input);
  ProperReport rep;
  if (in.is_object() && in.contains("numerator"))
    rep = verify_proper(io::rational_map_from_json(in), o.samples, o.tol, o.seed);
  else
    rep = verify_proper(io::map_from_json(in), o.samples, o.tol, o.seed);
  emit(o, io::report_to_json(rep),
       std::string(rep.pass ? "proper" : "NOT proper") + ": max deviation " + sci(rep.max_deviation) +
           " over " + std::to_string(rep.samples) + " samples");
  return rep.pass ? kOk : kDisproof;
}

int run_eq5(const Options& o) {
  const BihomogeneousForm form = io::form_from_json(io::read_json(o.input));
  const PNDecomposition pn = decompose_PN(form);
  const Equivalence5Certificate c = equivalence5_certificate(pn.positive, pn.negative, o.d, search(o));
  json doc = tagged("eq5", {{"d", o.d},
                            {"fit_ok", c.fit_ok},
                            {"fit_residual", c.fit_residual},
                            {"psd_ok", c.psd_ok},
                            {"min_eigenvalue", c.min_eigenvalue},
                            {"variety_ok", c.variety_ok},
                            {"variety_min", c.variety_min},
                            {"L", io::matrix_to_json(c.L)}});
  emit(o, doc,
       std::string(c.ok() ? "conditions hold" : "conditions fail") + " at d = " + std::to_string(o.d) +
           " (fit " + (c.fit_ok ? "ok" : "fail") + ", psd " + (c.psd_ok ? "ok" : "fail") + ", variety " +
           (c.variety_ok ? "ok" : "fail") + ")");
  return c.ok() ? kOk : kInconclusive;
}

int run_matrices(const Options& o) {
  const BihomogeneousForm form = io::form_from_json(io::read_json(o.input));
  ComplexPoint z;
  if (o.point.empty()) {
    z = sphere_sample(form.n(), o.seed, 0);
  } else {
    json pj;
    try {
      pj = json::parse(o.point);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("--point: ") + e.what());
    }
    z = io::complex_point_from_json(pj, "--point");
    if (z.size() != form.n()) throw InputError("--point: expected " + std::to_string(form.n()) + " coordinates");
  }
  const Eigen::MatrixXcd a = proposition1_matrix(form, z, o.max_degree_m);
  const Eigen::MatrixXcd l = corollary1_matrix(form, o.big_n);
  const Eigen::MatrixXcd s = corollary1_shifted_matrix(form, o.big_n);
  const double ea = min_eigenvalue(a), el = min_eigenvalue(l), es = min_eigenvalue(s);
  json doc = tagged("matrices", {{"point", io::complex_point_to_json(z)},
                                 {"index_degree", o.max_degree_m},
                                 {"big_n", o.big_n},
                                 {"proposition1", {{"matrix", io::matrix_to_json(a)}, {"min_eigenvalue", ea}}},
                                 {"corollary1", {{"matrix", io::matrix_to_json(l)}, {"min_eigenvalue", el}}},
                                 {"corollary1_shifted", {{"matrix", io::matrix_to_json(s)}, {"min_eigenvalue", es}}}});
  emit(o, doc,
       "min eigenvalues: proposition1 " + std::to_string(ea) + ", corollary1 " + std::to_string(el) +
           ", corollary1 shifted (Hermitian part) " + std::to_string(es));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact positivity certificates for Hermitian forms and proper maps between balls"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Command commands[] = {
      {"stabilize", "find the least d with ||z||^{2d} f positive definite, or a negative witness", run_stabilize},
      {"check-pd", "decide positive definiteness of a form's matrix", run_check_pd},
      {"inertia", "exact signature of a form's matrix", run_inertia},
      {"factor", "write a positive-definite form as ||g||^2", run_factor},
      {"polya", "Polya stabilization of a real homogeneous polynomial", run_polya},
      {"min-sphere", "estimate the minimum of a Hermitian polynomial on the unit sphere", run_min_sphere},
      {"complete", "complete a map with ||p|| < 1 on the sphere to a sphere map", run_complete},
      {"snr", "squared-norm representation of a polynomial positive on the sphere", run_snr},
      {"denominator", "proper rational map with denominator 1 + q", run_denominator},
      {"verify", "check ||F||^2 = 1 on sampled sphere points", run_verify},
      {"eq5", "check the L-factorization conditions for ||P||^2 - ||N||^2", run_eq5},
      {"matrices", "analysis matrices at a point and their minimum eigenvalues", run_matrices},
  };

  const Command* chosen = nullptr;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--input,-i", o.input, "input JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--output,-o", o.output, "output JSON file (stdout when omitted)");
    sub->add_option("--d-max", o.d_max, "largest stabilization degree tried")->capture_default_str();
    sub->add_option("--samples", o.samples, "sphere samples")->capture_default_str();
    sub->add_option("--refine-iters", o.refine_iters, "gradient refinement iterations")->capture_default_str();
    sub->add_option("--seed", o.seed, "sampling seed")->capture_default_str();
    sub->add_option("--tol", o.tol, "numeric tolerance")->capture_default_str();
    sub->add_flag("--allow-zero-witness", o.allow_zero, "accept sphere zeros as witnesses");
    sub->add_option("--max-degree-m", o.max_degree_m, "index degree of the pointwise matrix")->capture_default_str();
    sub->add_option("--big-n", o.big_n, "index degree N of the torus matrices")->capture_default_str();
    sub->add_option("--d", o.d, "stabilization degree for eq5")->capture_default_str();
    sub->add_option("--point", o.point, "point for matrices as JSON, e.g. [[0.6,0],[0,0.8]]");
    sub->callback([&chosen, &c] { chosen = &c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    return chosen->run(o);
  } catch (const ConstructionError& e) {
    return report_construction_error(o, e);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
}
