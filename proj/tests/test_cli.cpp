// Runs the command-line tool on the shipped corpus.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermpos/io.hpp"

#include <sys/wait.h>

#include <fstream>
#include <sstream>

using namespace hermpos;

namespace {

const std::filesystem::path kCorpus = CORPUS_DIR;

std::filesystem::path scratch() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / "hermpos_cli_test";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args) {
  const std::string cmd = std::string(HERMPOS_CLI) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int run_on(const std::string& command, const std::string& corpus_file, const std::string& output,
           const std::string& extra = "") {
  return run(command + " --input " + (kCorpus / corpus_file).string() + " --output " + (scratch() / output).string() +
             " " + extra);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit codes on the corpus") {
  struct Case {
    const char* command;
    const char* file;
    const char* extra;
    int code;
  };
  const Case cases[] = {
      {"stabilize", "p_c1.json", "", 0},
      {"stabilize", "p_c3_2.json", "", 0},
      {"stabilize", "p_c9_5.json", "", 0},
      {"stabilize", "quartic_diag.json", "", 0},
      {"stabilize", "p_c3.json", "", 2},
      {"stabilize", "indefinite.json", "", 2},
      {"stabilize", "perfect_square.json", "--d-max 32", 3},
      {"stabilize", "perfect_square.json", "--d-max 32 --allow-zero-witness", 2},
      {"stabilize", "bad_nonhermitian.json", "", 1},
      {"stabilize", "bad_malformed.json", "", 1},
      {"stabilize", "bad_dimension.json", "", 1},
      {"check-pd", "p_c1.json", "", 0},
      {"inertia", "quartic_diag.json", "", 0},
      {"factor", "quartic_diag.json", "", 1},
      {"polya", "polya_c1.json", "", 0},
      {"polya", "polya_c3.json", "", 2},
      {"min-sphere", "p_c1.json", "", 0},
      {"complete", "map_homogeneous.json", "", 0},
      {"complete", "map_general.json", "", 0},
      {"complete", "map_too_large.json", "", 2},
      {"snr", "snr_affine.json", "", 0},
      {"denominator", "denominator_q.json", "", 0},
      {"eq5", "p_c1.json", "--d 3", 0},
      {"eq5", "p_c1.json", "--d 0", 3},
      {"matrices", "p_c1.json", "--max-degree-m 2 --big-n 4", 0},
      {"matrices", "p_c1.json", "--point '[[0.6,0],[0,0.8]]'", 0},
      {"matrices", "p_c1.json", "--point '[1]'", 1},
      {"stabilize", "p_c1.json", "--no-such-flag", 1},
      {"stabilize", "missing.json", "", 1},
  };
  for (const auto& c : cases)
    CHECK_MESSAGE(run_on(c.command, c.file, "out.json", c.extra) == c.code,
                  c.command << " " << c.file << " " << c.extra);
  CHECK(run("") == 1);
  CHECK(run("frobnicate --input x") == 1);
  CHECK(run("--help") == 0);
}

TEST_CASE("certificates are byte-identical across runs and re-parse") {
  REQUIRE(run_on("stabilize", "p_c1.json", "a.json") == 0);
  REQUIRE(run_on("stabilize", "p_c1.json", "b.json") == 0);
  CHECK(slurp(scratch() / "a.json") == slurp(scratch() / "b.json"));
  const auto doc = io::read_json(scratch() / "a.json");
  CHECK(doc["d_min"] == 3);
  const auto stabilized = io::form_from_json(doc["stabilized_form"]);
  CHECK(io::map_from_json(doc["factor"]).squared_norm_form(5) == stabilized);
  CHECK(io::form_from_json(io::form_to_json(stabilized)) == stabilized);

  REQUIRE(run_on("stabilize", "p_c3.json", "w1.json") == 2);
  REQUIRE(run_on("stabilize", "p_c3.json", "w2.json") == 2);
  CHECK(slurp(scratch() / "w1.json") == slurp(scratch() / "w2.json"));
}

TEST_CASE("emitted completions verify") {
  for (const char* input : {"map_general.json", "map_homogeneous.json"}) {
    REQUIRE(run_on("complete", input, "completion.json") == 0);
    const auto out = (scratch() / "completion.json").string();
    CHECK(run("verify --input " + out + " --output " + (scratch() / "report.json").string()) == 0);
    const auto report = io::read_json(scratch() / "report.json");
    CHECK(report["pass"] == true);
    CHECK(report["max_deviation"].get<double>() <= 1e-8);
    const auto map = io::map_from_json(io::read_json(out));
    CHECK(io::map_from_json(io::map_to_json(map)) == map);
  }

  REQUIRE(run_on("denominator", "denominator_q.json", "rational.json") == 0);
  const auto rational = io::rational_map_from_json(io::read_json(scratch() / "rational.json"));
  CHECK(rational.lowest_terms);
  CHECK(run("verify --input " + (scratch() / "rational.json").string()) == 0);

  // a map that is not proper fails verification
  CHECK(run("verify --input " + (kCorpus / "map_general.json").string()) == 2);
}
