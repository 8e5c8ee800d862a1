// End-to-end tests of the command line tool. The binary path arrives as the
// first positional argument (see tests/CMakeLists.txt) or SPECTRADIAG_CLI.

#define DOCTEST_CONFIG_IMPLEMENT
#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string g_cli;
fs::path g_dir;
int g_counter = 0;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

std::string slurp_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path p = g_dir / (std::to_string(g_counter++) + "_" + name);
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p;
}

CliResult run_cli(const std::string& args, const std::string& stdin_data = "",
                  const std::string& env_prefix = "") {
  const fs::path out = g_dir / ("out" + std::to_string(g_counter));
  const fs::path err = g_dir / ("err" + std::to_string(g_counter));
  ++g_counter;
  std::string cmd = env_prefix + "\"" + g_cli + "\" " + args + " >" + out.string() + " 2>" +
                    err.string();
  if (!stdin_data.empty()) {
    const fs::path in = write_file("stdin", stdin_data);
    cmd += " <" + in.string();
  }
  const int rc = std::system(cmd.c_str());
  const int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return {code, slurp_file(out), slurp_file(err)};
}

}  // namespace

TEST_CASE("check: majorize and trace modes with exit codes") {
  const auto ok = run_cli("check " + write_file("p.json", R"({"lambda":[3,1],"d":[2,2]})").string());
  CHECK(ok.code == 0);
  const json j = json::parse(ok.out);
  CHECK(j["holds"] == true);
  CHECK(j["slacks"] == json::array({1.0, 0.0}));

  const auto bad =
      run_cli("check " + write_file("p.json", R"({"lambda":[2,2],"d":[3,1]})").string());
  CHECK(bad.code == 2);
  CHECK(json::parse(bad.out)["holds"] == false);

  const auto tr = run_cli(
      "check --mode trace " +
      write_file("p.json", R"({"lambda":[[0,1],[0,-1]],"d":[[0,0],[0,0]]})").string());
  CHECK(tr.code == 0);
  CHECK(json::parse(tr.out)["match"] == true);

  const auto mismatch = run_cli(
      "check --mode trace " + write_file("p.json", R"({"lambda":[1,1],"d":[1,1.5]})").string());
  CHECK(mismatch.code == 3);
}

TEST_CASE("malformed input exits 64 with a diagnostic") {
  const auto r = run_cli("check " + write_file("bad.json", "{\"lambda\": [1,\n}").string());
  CHECK(r.code == 64);
  CHECK(r.err.find("line") != std::string::npos);

  const auto missing = run_cli("check /nonexistent/path.json");
  CHECK(missing.code == 64);

  const auto badflag = run_cli("horn --emit z somefile");
  CHECK(badflag.code == 64);
}

TEST_CASE("horn: json output matches the closed form") {
  const auto r = run_cli("horn " + write_file("p.json", R"({"lambda":[3,1],"d":[2,2]})").string());
  REQUIRE(r.code == 0);
  CHECK(r.out.find("0.7071067811865476") != std::string::npos);
  const json j = json::parse(r.out);
  CHECK(j["n"] == 2);
  CHECK(j["q"][0][0] == std::sqrt(0.5));
  CHECK(j["q"][0][1] == -std::sqrt(0.5));
  CHECK(j["a"][0][1].get<double>() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(j["s"][0][0].get<double>() == doctest::Approx(0.5).epsilon(1e-14));

  // lambda == d: q and s are exactly the identity
  const auto id =
      run_cli("horn " + write_file("p.json", R"({"lambda":[4,2,1],"d":[4,2,1]})").string());
  REQUIRE(id.code == 0);
  const json ji = json::parse(id.out);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      CHECK(ji["q"][i][k] == (i == k ? 1.0 : 0.0));
      CHECK(ji["s"][i][k] == (i == k ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("horn: majorization failure names the first violated prefix") {
  const auto r = run_cli("horn " + write_file("p.json", R"({"lambda":[2,2],"d":[3,1]})").string());
  CHECK(r.code == 2);
  CHECK(r.err.find("prefix index 0") != std::string::npos);
}

TEST_CASE("horn: csv emission") {
  const auto path = write_file("p.json", R"({"lambda":[3,1],"d":[2,2]})").string();
  const auto q = run_cli("horn --format csv --emit q " + path);
  REQUIRE(q.code == 0);
  CHECK(q.out == "0.70710678118654757,-0.70710678118654757\n"
                 "0.70710678118654757,0.70710678118654757\n");

  const auto all = run_cli("horn --format csv " + path);
  CHECK(all.code == 64);  // several matrices need --out

  const std::string prefix = (g_dir / "hout").string();
  const auto out = run_cli("horn --format csv --out " + prefix + " " + path);
  REQUIRE(out.code == 0);
  CHECK(fs::exists(prefix + "_q.csv"));
  CHECK(fs::exists(prefix + "_a.csv"));
  CHECK(fs::exists(prefix + "_s.csv"));
}

TEST_CASE("horn: corr preset yields a unit diagonal") {
  const auto r = run_cli("horn --preset corr " +
                         write_file("p.json", R"({"lambda":[2,1,1]})").string());
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["lambda"] == json::array({1.5, 0.75, 0.75}));
  for (int i = 0; i < 3; ++i) {
    CHECK(j["a"][i][i].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("mirsky: json and csv") {
  const auto path = write_file("p.json", R"({"lambda":[5,1],"d":[2,4]})").string();
  const auto r = run_cli("mirsky " + path);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["a"] == json::array({{2.0, 1.0}, {3.0, 4.0}}));
  CHECK(j["l"] == json::array({{1.0, 0.0}, {-3.0, 1.0}}));
  CHECK(j["c_values"] == json::array({-3.0}));
  CHECK(j["is_real"] == true);

  const auto csv = run_cli("mirsky --format csv --emit a " + path);
  REQUIRE(csv.code == 0);
  CHECK(csv.out == "2,1\n3,4\n");

  // complex data has no csv convention
  const auto cplx = run_cli(
      "mirsky --format csv --emit a " +
      write_file("p.json", R"({"lambda":[[0,1],[0,-1]],"d":[0,0]})").string());
  CHECK(cplx.code == 64);

  // trace mismatch is exit 3
  const auto mism =
      run_cli("mirsky " + write_file("p.json", R"({"lambda":[1,1],"d":[1,1.5]})").string());
  CHECK(mism.code == 3);

  // lambda == d gives the identity and the companion matrix
  const auto id = run_cli("mirsky " + write_file("p.json", R"({"lambda":[7,3],"d":[7,3]})").string());
  REQUIRE(id.code == 0);
  const json ij = json::parse(id.out);
  CHECK(ij["l"] == json::array({{1.0, 0.0}, {0.0, 1.0}}));
  CHECK(ij["a"] == json::array({{7.0, 1.0}, {0.0, 3.0}}));

  // ill-conditioned L draws a growth warning on stderr but still succeeds
  const auto hot =
      run_cli("mirsky " + write_file("p.json", R"({"lambda":[1e9,-1e9],"d":[0,0]})").string());
  CHECK(hot.code == 0);
  CHECK(hot.err.find("growth") != std::string::npos);
}

TEST_CASE("gen: identical seeds produce identical bytes") {
  const auto a = run_cli("gen --seed 1 --n 5");
  const auto b = run_cli("gen --seed 1 --n 5");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());

  const auto c = run_cli("gen --seed 2 --n 5");
  CHECK(a.out != c.out);

  const auto tr = run_cli("gen --seed 3 --n 4 --kind trace --complex");
  CHECK(tr.code == 0);
  const json j = json::parse(tr.out);
  CHECK(j["lambda"].size() == 4);
  CHECK(j["lambda"][0].is_array());

  const auto corr = run_cli("gen --seed 4 --n 5 --preset corr");
  CHECK(corr.code == 0);
  const json cj = json::parse(corr.out);
  CHECK(cj["d"] == json::array({1.0, 1.0, 1.0, 1.0, 1.0}));
}

TEST_CASE("gen | horn | verify round trip") {
  const auto gen = run_cli("gen --seed 11 --n 9");
  REQUIRE(gen.code == 0);
  const auto problem = write_file("gen.json", gen.out);

  const auto horn = run_cli("horn " + problem.string());
  REQUIRE(horn.code == 0);
  const auto cert1 = write_file("cert.json", horn.out);

  // identical invocation, identical bytes
  const auto horn2 = run_cli("horn " + problem.string());
  CHECK(horn2.out == horn.out);

  const auto verify = run_cli("verify " + cert1.string());
  CHECK(verify.code == 0);
  CHECK(json::parse(verify.out)["pass"] == true);

  // tamper with one q entry by 1e-3
  json tampered = json::parse(horn.out);
  tampered["q"][0][0] = tampered["q"][0][0].get<double>() + 1e-3;
  const auto bad = run_cli("verify " + write_file("bad.json", tampered.dump()).string());
  CHECK(bad.code == 4);
  CHECK(json::parse(bad.out)["pass"] == false);

  // tamper with the stored a matrix instead
  json tampered_a = json::parse(horn.out);
  tampered_a["a"][0][0] = tampered_a["a"][0][0].get<double>() + 1e-3;
  CHECK(run_cli("verify " + write_file("bad_a.json", tampered_a.dump()).string()).code == 4);
}

TEST_CASE("gen | mirsky | verify round trip, stdin input") {
  const auto gen = run_cli("gen --seed 21 --n 6 --kind trace --complex");
  REQUIRE(gen.code == 0);
  const auto mirsky = run_cli("mirsky -", gen.out);
  REQUIRE(mirsky.code == 0);
  const auto verify = run_cli("verify -", mirsky.out);
  CHECK(verify.code == 0);

  json tampered = json::parse(mirsky.out);
  tampered["a"][0][0][0] = tampered["a"][0][0][0].get<double>() + 1e-3;
  CHECK(run_cli("verify -", tampered.dump()).code == 4);
}

TEST_CASE("tolerance precedence: flag beats env beats default") {
  // fails at the default 1e-12, passes at 1e-6
  const auto path =
      write_file("p.json", R"({"lambda":[3,1],"d":[3.000000001,0.999999999]})").string();
  CHECK(run_cli("check " + path).code == 2);
  CHECK(run_cli("check " + path, "", "SPECTRA_DIAG_TOL=1e-6 ").code == 0);
  CHECK(run_cli("check --tol 0 " + path, "", "SPECTRA_DIAG_TOL=1e-6 ").code == 2);
  CHECK(run_cli("check " + path, "", "SPECTRA_DIAG_TOL=bogus ").code == 64);
}

int main(int argc, char** argv) {
  if (const char* env = std::getenv("SPECTRADIAG_CLI")) g_cli = env;
  int doctest_argc = 0;
  static std::vector<char*> doctest_argv;
  for (int i = 0; i < argc; ++i) {
    if (i == 1 && argv[i][0] != '-') {
      g_cli = argv[i];
      continue;
    }
    doctest_argv.push_back(argv[i]);
    ++doctest_argc;
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "usage: cli_tests <path-to-spectradiag-binary>\n");
    return 1;
  }

  g_dir = fs::temp_directory_path() /
          ("spectradiag_cli_tests_" + std::to_string(::getpid()));
  fs::create_directories(g_dir);

  doctest::Context ctx(doctest_argc, doctest_argv.data());
  const int rc = ctx.run();

  std::error_code ec;
  fs::remove_all(g_dir, ec);
  return rc;
}
