#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "../tools/parse.hpp"
#include "opuc/popuc.hpp"
#include "opuc/szego.hpp"
#include "schema_validator.hpp"
#include "test_util.hpp"

using namespace opuc;
using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string base = "/tmp/opucrange_cli_" + std::to_string(counter++);
  std::string cmd = std::string(OPUCRANGE_BIN) + " " + args + " > " + base + ".out 2> " + base + ".err";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = (status >= 0) ? ((status >> 8) & 0xff) : -1;
  r.out = slurp(base + ".out");
  r.err = slurp(base + ".err");
  std::remove((base + ".out").c_str());
  std::remove((base + ".err").c_str());
  return r;
}

json load_schema() { return json::parse(slurp(SCHEMA_PATH)); }

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string cx_arg(cx z) { return fmt17(z.real()) + (z.imag() >= 0 ? "+" : "") + fmt17(z.imag()) + "i"; }

std::string list_arg(const std::vector<cx>& zs) {
  std::string s;
  for (size_t i = 0; i < zs.size(); ++i) {
    if (i) s += ",";
    s += cx_arg(zs[i]);
  }
  return s;
}

}  // namespace

TEST_CASE("complex literal parsing") {
  using cli::parse_complex;
  CHECK(std::abs(parse_complex("1.5") - cx(1.5)) == 0.0);
  CHECK(std::abs(parse_complex("1e-3") - cx(0.001)) == 0.0);
  CHECK(std::abs(parse_complex("-2.5i") - cx(0.0, -2.5)) == 0.0);
  CHECK(std::abs(parse_complex("i") - cx(0.0, 1.0)) == 0.0);
  CHECK(std::abs(parse_complex("-i") - cx(0.0, -1.0)) == 0.0);
  CHECK(std::abs(parse_complex("1+2i") - cx(1.0, 2.0)) == 0.0);
  CHECK(std::abs(parse_complex("-1.25e1-0.5i") - cx(-12.5, -0.5)) == 0.0);
  CHECK(std::abs(parse_complex("0.8e34i") - 0.8 * unit(34.0)) < 1e-16);
  CHECK(std::abs(parse_complex("0.57e4i") - 0.57 * unit(4.0)) < 1e-16);
  CHECK(std::abs(parse_complex(" 0.25 ") - cx(0.25)) == 0.0);  // whitespace stripped
  CHECK_THROWS_AS(parse_complex("zzz"), ValidationError);
  CHECK_THROWS_AS(parse_complex("0.5,"), ValidationError);
  CHECK(cli::parse_complex_list("1,i,0.5e1i").size() == 3);
}

TEST_CASE("popuc-zeros: values, schema, determinism") {
  json schema = load_schema();
  RunResult r = run_cli("popuc-zeros --alphas 0,0 --lambda 1");
  REQUIRE(r.exit_code == 0);
  json artifact = json::parse(r.out);
  CHECK(testutil::artifact_valid(schema, artifact));
  auto zeros = artifact["frame"]["zeros"];
  REQUIRE(zeros.size() == 3);
  CHECK(std::abs(zeros[0][0].get<double>() - 1.0) < 1e-12);
  for (const auto& w : artifact["frame"]["weights"])
    CHECK(std::abs(w.get<double>() - 1.0 / 3.0) < 1e-12);

  RunResult again = run_cli("popuc-zeros --alphas 0,0 --lambda 1");
  CHECK(again.out == r.out);  // byte identical
}

TEST_CASE("every JSON artifact kind validates against the shipped schema") {
  json schema = load_schema();
  const char* jobs[] = {
      "opuc --alphas 0.5,0.1+0.2i --lambda i",
      "opuc --alphas 0.5",
      "popuc-zeros --alphas 0.5,0.1+0.2i --lambda i",
      "weights --alphas 0.5,0.1+0.2i --lambda -1",
      "mfunction --alphas 0.5,0.1+0.2i --lambda 1 --z 2,0.5i",
      "numrange --alphas 0.3,0.2i --lambdas 16 --oracle-angles 8",
      "polygons --alphas 0.3,0.2i --lambdas 8",
      "chords --alphas 0.3,0.2i --lambdas 8",
      "critical --points 0.1,0.2i",
      "billiard --foci 0,0 --ngon 3",
      "billiard --foci 0.1,0.2i --semimajor 0.5 --steps 4",
      "billiard --alphas 0.3,0.2i --steps 3 --lambdas 64",
  };
  for (const char* job : jobs) {
    CAPTURE(job);
    RunResult r = run_cli(job);
    REQUIRE(r.exit_code == 0);
    json artifact = json::parse(r.out);
    CHECK(testutil::artifact_valid(schema, artifact));
  }
}

TEST_CASE("wendroff CLI round trip for the worked word") {
  VerblunskyWord w = VerblunskyWord::interior({cx(0.5), cx(0.0, 1.0 / 3.0)});
  PonceletFrame f1 = popuc_zeros(w, cx(1.0));
  PonceletFrame fi = popuc_zeros(w, cx(0.0, 1.0));
  RunResult r = run_cli("wendroff2 --first " + list_arg(f1.zeros) + " --second " + list_arg(fi.zeros));
  REQUIRE(r.exit_code == 0);
  json artifact = json::parse(r.out);
  CHECK(testutil::artifact_valid(load_schema(), artifact));
  auto alphas = artifact["alphas"];
  REQUIRE(alphas.size() == 2);
  CHECK(std::abs(alphas[0][0].get<double>() - 0.5) < 1e-8);
  CHECK(std::abs(alphas[0][1].get<double>()) < 1e-8);
  CHECK(std::abs(alphas[1][0].get<double>()) < 1e-8);
  CHECK(std::abs(alphas[1][1].get<double>() - 1.0 / 3.0) < 1e-8);
  CHECK(std::abs(artifact["lambda"][0].get<double>() - 1.0) < 1e-9);
  CHECK(std::abs(artifact["mu"][1].get<double>() - 1.0) < 1e-9);
}

TEST_CASE("wendroff-second-kind CLI") {
  VerblunskyWord w = VerblunskyWord::interior({cx(0.4, -0.1)});
  PonceletFrame first = popuc_zeros(w, cx(1.0));
  PonceletFrame second = popuc_zeros(w.sign_flipped(), cx(-1.0));
  RunResult r =
      run_cli("wendroff-second-kind --first " + list_arg(first.zeros) + " --second " + list_arg(second.zeros));
  REQUIRE(r.exit_code == 0);
  json artifact = json::parse(r.out);
  CHECK(testutil::artifact_valid(load_schema(), artifact));
  CHECK(std::abs(artifact["alphas"][0][0].get<double>() - 0.4) < 1e-8);
  CHECK(std::abs(artifact["alphas"][0][1].get<double>() + 0.1) < 1e-8);
}

TEST_CASE("contraction-invert CLI") {
  RunResult r = run_cli(
      "contraction-invert --matrix "
      "'{\"matrix\":[[[0,0],[0,0]],[[1,0],[0,0]]]}'");
  REQUIRE(r.exit_code == 0);
  json artifact = json::parse(r.out);
  CHECK(testutil::artifact_valid(load_schema(), artifact));
  for (const auto& a : artifact["alphas"]) {
    CHECK(std::abs(a[0].get<double>()) < 1e-8);
    CHECK(std::abs(a[1].get<double>()) < 1e-8);
  }

  RunResult bad = run_cli(
      "contraction-invert --matrix "
      "'{\"matrix\":[[[1,0],[0,0]],[[0,0],[0,0]]]}'");
  CHECK(bad.exit_code == 2);
  json err = json::parse(bad.err);
  CHECK(err["error"] == "NotCompletelyNonUnitaryError");
}

TEST_CASE("exit codes and machine readable errors") {
  RunResult r = run_cli("popuc-zeros --alphas 2 --lambda 1");
  CHECK(r.exit_code == 2);
  json err = json::parse(r.err);
  CHECK(err["error"] == "ValidationError");
  CHECK(err.contains("message"));

  RunResult parse_fail = run_cli("popuc-zeros --alphas");
  CHECK(parse_fail.exit_code == 2);

  RunResult bad_lambda = run_cli("popuc-zeros --alphas 0.5 --lambda 0.5");
  CHECK(bad_lambda.exit_code == 2);

  RunResult pole = run_cli("mfunction --alphas 0,0 --lambda 1 --z 1");
  CHECK(pole.exit_code == 2);
  CHECK(json::parse(pole.err)["error"] == "PoleError");
}

TEST_CASE("csv output has a header and one row per zero") {
  RunResult r = run_cli("popuc-zeros --alphas 0,0 --lambda 1 --format csv");
  REQUIRE(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "index,zero_re,zero_im,weight,christoffel");
  int rows = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 3);

  RunResult again = run_cli("popuc-zeros --alphas 0,0 --lambda 1 --format csv");
  CHECK(again.out == r.out);  // byte identical
}

TEST_CASE("svg output") {
  RunResult r = run_cli("numrange --alphas 0.3,0.2i --lambdas 16 --format svg");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("<svg") != std::string::npos);
  CHECK(r.out.find("<polygon") != std::string::npos);
  CHECK(r.out.find("</svg>") != std::string::npos);
}

TEST_CASE("figure command emits SVGs and schema-valid data") {
  std::string prefix = "/tmp/opucrange_fig_test";
  RunResult r = run_cli("figure --eigs '0.8e34i,0.57e4i,0.7i' --lambdas 12 --out " + prefix + " --data " +
                        prefix + ".json");
  REQUIRE(r.exit_code == 0);
  std::string poly_svg = slurp(prefix + "_polygons.svg");
  std::string chord_svg = slurp(prefix + "_chords.svg");
  CHECK(poly_svg.find("<svg") != std::string::npos);
  CHECK(chord_svg.find("<line") != std::string::npos);
  json data = json::parse(slurp(prefix + ".json"));
  CHECK(testutil::artifact_valid(load_schema(), data));
  CHECK(data["polygons"].size() == 12);
  CHECK(data["chords"].size() == 12 * 6);
  std::remove((prefix + "_polygons.svg").c_str());
  std::remove((prefix + "_chords.svg").c_str());
  std::remove((prefix + ".json").c_str());
}

TEST_CASE("schema subcommand prints the schema itself") {
  RunResult r = run_cli("schema");
  REQUIRE(r.exit_code == 0);
  json s = json::parse(r.out);
  CHECK(s.contains("definitions"));
  CHECK(s == load_schema());
}
