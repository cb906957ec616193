#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qforms/cli.hpp"

using namespace qforms;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
  int code;
};

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"coeffs_theta3", {"coeffs", "--series", "theta3", "--order", "10"}, 0},
      {"coeffs_partition_json", {"coeffs", "--series", "partition", "--order", "8", "--json"}, 0},
      {"coeffs_phi3", {"coeffs", "--series", "phi_nu", "--nu", "3", "--order", "70"}, 0},
      {"coeffs_product", {"coeffs", "--series", "product", "--exponent", "mu", "--order", "12"}, 0},
      {"coeffs_theta_alt", {"coeffs", "--series", "theta", "--a", "5/2", "--b", "3/2", "--alternating", "--order", "20"}, 0},
      {"table_c_nu", {"table", "--fn", "c_nu", "--nu", "3", "--from", "1", "--to", "24"}, 0},
      {"table_r2_json", {"table", "--fn", "r2", "--from", "0", "--to", "5", "--json"}, 0},
      {"rep_sum_two_squares", {"rep", "--form", "x^2+y^2", "--n", "5", "--witnesses"}, 0},
      {"rep_cubes_json", {"rep", "--form", "x^3+y^3", "--n", "1729", "--domain", "x=N1,y=N1", "--json"}, 0},
      {"verify_jacobi2sq", {"verify", "--id", "jacobi2sq"}, 0},
      {"verify_th47_json", {"verify", "--id", "th47", "--param", "nu=3", "--json"}, 0},
      {"verify_corrupted", {"verify", "--id", "th47_corrupted"}, 0},
      {"verify_mutated", {"verify", "--id", "th47", "--mutate"}, 1},
      {"suite_th6", {"suite", "--filter", "th6"}, 0},
      {"residues_classify", {"residues", "classify", "--t", "31"}, 0},
      {"residues_res", {"residues", "res", "--a", "1", "--n", "15"}, 0},
      {"residues_th75", {"residues", "th75", "--p", "3", "--q", "7"}, 0},
      {"residues_check", {"residues", "check", "--a", "1", "--b", "1", "--n", "3"}, 0},
  };
  return cases;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("golden outputs") {
  bool update = std::getenv("QFORMS_UPDATE_GOLDEN") != nullptr;
  for (const GoldenCase& g : golden_cases()) {
    INFO(g.name);
    Run r = run(g.args);
    CHECK(r.code == g.code);
    std::string path = std::string(QFORMS_GOLDEN_DIR) + "/" + g.name + ".out";
    if (update) std::ofstream(path, std::ios::binary) << r.out;
    CHECK(r.out == read_file(path));
  }
}

TEST_CASE("output is byte-deterministic") {
  for (const GoldenCase& g : golden_cases()) {
    INFO(g.name);
    CHECK(run(g.args).out == run(g.args).out);
  }
}

TEST_CASE("usage and library errors exit with 2") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"coeffs"},
           {"coeffs", "--series", "nope"},
           {"coeffs", "--series", "theta3", "--order", "ten"},
           {"verify", "--id", "no_such_identity"},
           {"verify", "--id", "th47", "--param", "novalue"},
           {"suite", "--filter", "zzz"},
           {"rep", "--form", "x^2+", "--n", "5"},
           {"residues", "check", "--a", "1", "--b", "3", "--n", "7"},
           {"residues", "classify", "--t", "5"},
       }) {
    Run r = run(args);
    INFO(args.size());
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());
  }
}

TEST_CASE("help exits with 0") {
  Run r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
  Run s = run({"verify", "--help"});
  CHECK(s.code == 0);
  CHECK(s.out.find("--mutate") != std::string::npos);
}

TEST_CASE("identity failure exits with 1") {
  Run r = run({"verify", "--id", "jacobi2sq", "--mutate", "--json"});
  CHECK(r.code == 1);
  CHECK(r.out.find("\"status\": \"FAIL\"") != std::string::npos);
  CHECK(r.out.find("\"located\": true") != std::string::npos);
}
