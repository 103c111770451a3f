#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermpos/io.hpp"
#include "support.hpp"

#include <fstream>

using namespace hermpos;
using namespace testing_support;
using io::json;

namespace {

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hermpos_test_" + name);
}

}  // namespace

TEST_CASE("form round trip") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_form(rng, 1 + trial % 3, trial % 3);
    const json j = io::form_to_json(f);
    CHECK(j["format_version"] == 1);
    CHECK(io::form_from_json(j) == f);
    CHECK(io::form_from_json(json::parse(j.dump())) == f);
  }
}

TEST_CASE("form schema") {
  const json j = io::form_to_json(p_c(Rational(3, 2)));
  CHECK(j["n"] == 2);
  CHECK(j["m"] == 2);
  REQUIRE(j["entries"].size() == 3);
  CHECK(j["entries"][1]["alpha"] == json({1, 1}));
  CHECK(j["entries"][1]["re"] == "-3/2");
  CHECK(j["entries"][1]["im"] == "0/1");
}

TEST_CASE("map, polynomial and real polynomial round trips") {
  std::mt19937_64 rng(42);
  const auto pn = decompose_PN(random_form(rng, 2, 2));
  const HoloPolyMap& g = pn.positive;
  CHECK(io::map_from_json(io::map_to_json(g)) == g);

  HermitianPolynomial f(2, {{{0, 0}, {0, 0}, GaussianRational(3)}, {{1, 0}, {0, 1}, GaussianRational(1, 2)}});
  CHECK(io::polynomial_from_json(io::polynomial_to_json(f)) == f);

  const auto p = polya_c(Rational(3, 2));
  CHECK(io::real_polynomial_from_json(io::real_polynomial_to_json(p)) == p);

  Polynomial den = Polynomial::constant(2, GaussianRational(1));
  den.add_term({1, 0}, GaussianRational(Rational(1, 2)));
  const RationalMap r{g, den, true};
  const RationalMap back = io::rational_map_from_json(io::rational_map_to_json(r));
  CHECK(back.numerator == r.numerator);
  CHECK(back.denominator == r.denominator);
  CHECK(back.lowest_terms);
}

TEST_CASE("floats survive serialization bit for bit") {
  const ComplexPoint z{{0.1, -1.0 / 3.0}, {std::sqrt(2.0), 1e-300}};
  const json j = json::parse(io::complex_point_to_json(z).dump());
  CHECK(io::complex_point_from_json(j, "p") == z);
}

TEST_CASE("errors name the offending field") {
  const json base = io::form_to_json(p_c(1));

  json missing = base;
  missing.erase("m");
  CHECK(error_of([&] { io::form_from_json(missing); }).find("\"m\"") != std::string::npos);

  json bad_rational = base;
  bad_rational["entries"][2]["re"] = "1/0";
  CHECK(error_of([&] { io::form_from_json(bad_rational); }).find("entries[2].re") != std::string::npos);

  json bad_index = base;
  bad_index["entries"][0]["beta"] = json({2, -1});
  CHECK(error_of([&] { io::form_from_json(bad_index); }).find("entries[0].beta[1]") != std::string::npos);

  json bad_version = base;
  bad_version["format_version"] = 2;
  CHECK(error_of([&] { io::form_from_json(bad_version); }).find("format_version") != std::string::npos);

  json non_hermitian = base;
  non_hermitian["entries"][0]["im"] = "1/2";
  CHECK_THROWS_AS(io::form_from_json(non_hermitian), InputError);

  json map = io::map_to_json(H_map(2, 1));
  map["components"][1]["scale"] = "-1/2";
  CHECK(error_of([&] { io::map_from_json(map); }).find("components[1].scale") != std::string::npos);
}

TEST_CASE("parse errors report line and column") {
  const auto path = temp_path("malformed.json");
  {
    std::ofstream out(path);
    out << "{\n  \"n\": 2,\n  \"m\": ]\n}\n";
  }
  const std::string msg = error_of([&] { io::read_json(path); });
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK_THROWS_AS(io::read_json(temp_path("does_not_exist.json")), InputError);
  std::filesystem::remove(path);
}

TEST_CASE("atomic write replaces the target and leaves no temporary") {
  const auto path = temp_path("atomic.json");
  io::write_json_atomic(path, io::form_to_json(p_c(1)));
  io::write_json_atomic(path, io::form_to_json(p_c(2)));
  CHECK(io::form_from_json(io::read_json(path)) == p_c(2));
  auto tmp = path;
  tmp += ".tmp";
  CHECK_FALSE(std::filesystem::exists(tmp));
  std::filesystem::remove(path);
}

TEST_CASE("certificate and witness documents") {
  const auto r = stabilize(p_c(1), 8);
  const json cert = io::certificate_to_json(std::get<StabilizationCertificate>(r));
  CHECK(cert["d_min"] == 3);
  CHECK(cert["minimality_checked"] == true);
  CHECK(io::form_from_json(cert["stabilized_form"]) == multiply_by_norm_power(p_c(1), 3));
  CHECK(io::map_from_json(cert["factor"]).squared_norm_form(5) == multiply_by_norm_power(p_c(1), 3));

  const auto w = stabilize(p_c(3), 4);
  const json wj = io::witness_to_json(std::get<NegativeWitness>(w));
  CHECK(wj["value"].get<double>() < 0);
  CHECK(parse_rational(wj["exact_confirmation"]["value"].get<std::string>()) < 0);
  CHECK(wj["point"].size() == 2);
}
