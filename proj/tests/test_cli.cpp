#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tropcomm/cli.hpp"

namespace fs = std::filesystem;
using tropcomm::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TROPCOMM_DATA_DIR) + "/" + name; }

std::string golden(const std::string& name) {
  std::ifstream in(std::string(TROPCOMM_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("tropcomm_cli_" + name);
  std::ofstream(p) << content;
  return p;
}

void check_golden(const std::string& file, std::vector<std::string> args, int code = 0) {
  CAPTURE(file);
  const auto r = call(std::move(args));
  CHECK(r.code == code);
  CHECK(r.out == golden(file));
}

}  // namespace

TEST_CASE("check output") {
  check_golden("check_example5.txt", {"check", data("example5_pair.json")});
  check_golden("check_example6.txt", {"check", data("example6_pair.json")});
  check_golden("check_example7.txt", {"check", data("example7_pair.json")});
  check_golden("check_example7_json.txt", {"check", data("example7_pair.json"), "--json"});
  check_golden("check_prop7a.txt", {"check", data("prop7a_pair.json")});
  check_golden("check_prop7b.txt", {"check", data("prop7b_pair.json")});
  check_golden("check_prop7c.txt", {"check", data("prop7c_pair.json")});
  check_golden("check_ts2_not_tpre.txt", {"check", data("ts2_not_tpre_pair.json")});
  check_golden("check_tpre2_not_ts.txt", {"check", data("tpre2_not_ts_pair.json")});
  check_golden("check_tc2.txt", {"check", data("tc2_pair.json")});
}

TEST_CASE("other subcommands") {
  check_golden("gens_n2.txt", {"gens", "--n", "2"});
  check_golden("gens_sym3.txt", {"gens", "--n", "3", "--symmetric"});
  check_golden("certify_prop7b.txt", {"certify", data("prop7b_pair.json")});
  check_golden("certify_prop7a.txt", {"certify", data("prop7a_pair.json")});
  check_golden("fan_n2.txt", {"fan", "commuting:n=2", "--orbits"});
  check_golden("lift_tc2.txt", {"lift", data("tc2_pair.json")});
  check_golden("lift_verify_tc2.txt", {"lift-verify", data("tc2_lift.json")});
  check_golden("lift_verify_perturbed.txt", {"lift-verify", data("tc2_lift_perturbed.json")}, 1);
  check_golden("star_premetric3.txt", {"star", data("premetric3.json")});
  check_golden("sample_ts_minus_tpre.txt", {"sample", "--region", "ts-minus-tpre", "--n", "3", "--seed", "7"});
}

TEST_CASE("json output parses") {
  const auto r = call({"fan", "commuting:n=2", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"f_vector\"") != std::string::npos);
  const auto c = call({"certify", data("prop7b_pair.json"), "--json"});
  CHECK(c.code == 0);
  CHECK(c.out.find("\"generator\"") != std::string::npos);
}

TEST_CASE("budget exit code and reference output") {
  const auto r = call({"fan", "commuting:n=3"});
  CHECK(r.code == tropcomm::cli::kBudget);
  CHECK(r.out.empty());
  CHECK(r.err == golden("fan_n3_budget.err"));

  CHECK(call({"fan", "commuting:n=2", "--budget", "10"}).code == tropcomm::cli::kBudget);
  ::setenv(tropcomm::cli::kBudgetEnv, "10", 1);
  CHECK(call({"fan", "commuting:n=2"}).code == tropcomm::cli::kBudget);
  CHECK(call({"fan", "commuting:n=2", "--budget", "1000"}).code == 0);
  ::unsetenv(tropcomm::cli::kBudgetEnv);
  CHECK(call({"fan", "commuting:n=2"}).code == 0);
}

TEST_CASE("fan from a polynomial file") {
  const auto p = temp_file("line.json", R"({"dimension": 3, "polynomials": [[
    {"coefficient": 1, "exponents": [1, 0, 0]},
    {"coefficient": 1, "exponents": [0, 1, 0]},
    {"coefficient": 1, "exponents": [0, 0, 1]}]]})");
  const auto r = call({"fan", p.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("f-vector: (1, 3)") != std::string::npos);
  fs::remove(p);
}

TEST_CASE("parse errors exit with 2") {
  const auto bad = temp_file("bad.json", "{ not json");
  CHECK(call({"check", bad.string()}).code == tropcomm::cli::kParseError);
  const auto entries = temp_file("entries.json", R"({"A": [[0, "x"], [1, 0]], "B": [[0, 1], [1, 0]]})");
  CHECK(call({"check", entries.string()}).code == tropcomm::cli::kParseError);
  CHECK(call({"bogus"}).code == tropcomm::cli::kParseError);
  CHECK(call({"fan", "commuting:n=x"}).code == tropcomm::cli::kParseError);
  CHECK(call({"sample", "--region", "nowhere", "--n", "3"}).code == tropcomm::cli::kParseError);
  fs::remove(bad);
  fs::remove(entries);
}

TEST_CASE("unsupported sizes exit with 3") {
  CHECK(call({"certify", data("tc2_pair.json")}).code == tropcomm::cli::kUnsupported);
  CHECK(call({"fan", "symmetric:n=9"}).code == tropcomm::cli::kUnsupported);
  CHECK(call({"svg", data("tc2_pair.json")}).code == tropcomm::cli::kUnsupported);
  CHECK(call({"lift", data("prop7a_pair.json")}).code != 0);
}

TEST_CASE("exhaustion exits with 5") {
  const auto r = call({"sample", "--region", "certified-out", "--n", "3", "--seed", "7", "--max-draws", "3"});
  CHECK(r.code == tropcomm::cli::kExhausted);
  CHECK(r.err.find("after 3 draws") != std::string::npos);
}

TEST_CASE("sampling is reproducible") {
  const std::vector<std::string> args{"sample", "--region", "tpre-minus-ts", "--n", "3", "--seed", "11"};
  const auto a = call(args);
  const auto b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("TS: no, Tpre: yes") != std::string::npos);
}

TEST_CASE("svg to a file") {
  const fs::path p = fs::temp_directory_path() / "tropcomm_cli_ex7.svg";
  CHECK(call({"svg", data("example7_pair.json"), "-o", p.string()}).code == 0);
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().rfind("<?xml", 0) == 0);
  CHECK(ss.str().find("</svg>") != std::string::npos);
  fs::remove(p);
}
