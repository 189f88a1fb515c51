#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(WEDGEKIT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class TempDir {
 public:
  TempDir() {
    dir_ = fs::temp_directory_path() / ("wedgekit_cli_" + std::to_string(getpid()));
    fs::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  std::string write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

 private:
  fs::path dir_;
};

nlohmann::json outputs_of(const RunResult& r) {
  return nlohmann::json::parse(r.output).at("outputs");
}

}  // namespace

TEST_CASE("wedge command reproduces the worked product and conversions") {
  TempDir tmp;
  const std::string file = tmp.write("ex.txt", "2 3 -1 5\n4 7 2 0\n");

  const RunResult text = run_cli("wedge " + file);
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("-10 35 13 20 8 -2") != std::string::npos);

  const RunResult json = run_cli("wedge " + file + " --plucker --format json");
  REQUIRE(json.exit_code == 0);
  const auto out = outputs_of(json);
  CHECK(out.at("wedge") == nlohmann::json({"-10", "35", "13", "20", "8", "-2"}));
  CHECK(out.at("plucker") == nlohmann::json({"2", "8", "-20", "13", "-35", "-10"}));
  CHECK(out.at("convention") == "paper-reversed");
}

TEST_CASE("square wedge input reports the determinant") {
  TempDir tmp;
  const std::string file = tmp.write("sq.txt", "2 3\n4 7\n");
  const RunResult r = run_cli("wedge " + file + " --format json");
  REQUIRE(r.exit_code == 0);
  const auto out = outputs_of(r);
  CHECK(out.at("det") == "2");
  CHECK(out.at("wedge") == nlohmann::json({"2"}));
}

TEST_CASE("an (n-1) x n wedge matches the cross command") {
  TempDir tmp;
  const std::string file = tmp.write("m.txt", "1 2 3 4\n-1 0 2 5\n3 3 3 3\n");
  const RunResult w = run_cli("wedge " + file + " --format json");
  const RunResult c = run_cli("cross " + file + " --format json");
  REQUIRE(w.exit_code == 0);
  REQUIRE(c.exit_code == 0);
  CHECK(outputs_of(w).at("wedge") == outputs_of(c).at("cross"));
}

TEST_CASE("cross command emits an orthogonality table") {
  TempDir tmp;
  const std::string file = tmp.write("basis.txt", "1 0 0\n0 1 0\n");
  const RunResult r = run_cli("cross " + file + " --format json");
  REQUIRE(r.exit_code == 0);
  const auto rep = nlohmann::json::parse(r.output);
  CHECK(rep.at("outputs").at("cross") == nlohmann::json({"0", "0", "1"}));
  REQUIRE(rep.at("checks").size() == 2);
  for (const auto& check : rep.at("checks")) CHECK(check.at("pass") == true);
}

TEST_CASE("cross flags palindromic degeneracy") {
  TempDir tmp;
  const std::string file = tmp.write("pal.txt", "1 2 2 1\n3 5 5 3\n0 7 7 0\n");
  const RunResult r = run_cli("cross " + file + " --format json");
  REQUIRE(r.exit_code == 0);
  const auto rep = nlohmann::json::parse(r.output);
  CHECK(rep.at("outputs").at("cross") == nlohmann::json({"0", "0", "0", "0"}));
  bool flagged = false;
  for (const auto& check : rep.at("checks")) {
    flagged = flagged || check.at("name") == "degenerate: palindromic";
  }
  CHECK(flagged);
}

TEST_CASE("solve command returns the solution with a residual check") {
  TempDir tmp;
  const std::string file = tmp.write("sys.txt", "2 1\n1 3\nb: 5 10\n");
  const RunResult r = run_cli("solve " + file + " --format json");
  REQUIRE(r.exit_code == 0);
  const auto rep = nlohmann::json::parse(r.output);
  CHECK(rep.at("outputs").at("solution") == nlohmann::json({"1", "3"}));
  CHECK(rep.at("outputs").at("residual") == nlohmann::json({"0", "0"}));
  CHECK(rep.at("all_pass") == true);

  const RunResult f = run_cli("solve " + file + " --mode float --format json");
  CHECK(f.exit_code == 0);
}

TEST_CASE("exit codes follow the contract") {
  TempDir tmp;
  // 2: parse error with position diagnostics.
  const std::string bad = tmp.write("bad.txt", "1 2\n3 oops\n");
  const RunResult parse = run_cli("wedge " + bad);
  CHECK(parse.exit_code == 2);
  CHECK(parse.output.find("line 2") != std::string::npos);

  // 2: k > n.
  const std::string tall = tmp.write("tall.txt", "1 2\n3 4\n5 6\n");
  CHECK(run_cli("wedge " + tall).exit_code == 2);

  // 2: missing file and unknown verify id.
  CHECK(run_cli("wedge " + tmp.write("x", "") + "missing").exit_code == 2);
  CHECK(run_cli("verify prop9").exit_code == 2);
  CHECK(run_cli("verify prop1 --nmin 5 --nmax 2").exit_code == 2);

  // 3: capacity.
  const std::string wide = tmp.write("wide.txt", "1 2 3 4 5 6\n6 5 4 3 2 1\n");
  CHECK(run_cli("wedge " + wide + " --cap 5").exit_code == 3);

  // 4: singular system.
  const std::string sing = tmp.write("sing.txt", "1 1\n4 4\nb: 1 2\n");
  const RunResult s = run_cli("solve " + sing);
  CHECK(s.exit_code == 4);
  CHECK(s.output.find("det(A) = 0") != std::string::npos);

  // 0 and 1 come from verify below; no subcommand is an input error.
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("component cap: environment variable and flag precedence") {
  TempDir tmp;
  const std::string wide = tmp.write("wide.txt", "1 2 3 4 5 6\n6 5 4 3 2 1\n");
  setenv("WEDGEKIT_CAP", "5", 1);
  CHECK(run_cli("wedge " + wide).exit_code == 3);
  CHECK(run_cli("wedge " + wide + " --cap 100").exit_code == 0);  // flag wins
  setenv("WEDGEKIT_CAP", "not-a-number", 1);
  CHECK(run_cli("wedge " + wide).exit_code == 2);
  unsetenv("WEDGEKIT_CAP");
  CHECK(run_cli("wedge " + wide).exit_code == 0);
}

TEST_CASE("verify runs the named suites deterministically") {
  const RunResult p1 = run_cli("verify prop1 --format json");
  REQUIRE(p1.exit_code == 0);
  const auto rep = nlohmann::json::parse(p1.output);
  CHECK(rep.at("checks").size() == 12);
  CHECK(rep.at("all_pass") == true);

  const RunResult a = run_cli("verify prop3 --trials 20 --seed 99 --format json");
  const RunResult b = run_cli("verify prop3 --trials 20 --seed 99 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  CHECK(run_cli("verify palindromic-vanish --trials 10").exit_code == 0);
  CHECK(run_cli("verify cramer-equiv --trials 5 --nmax 4").exit_code == 0);
  CHECK(run_cli("verify wedge-props --trials 3 --nmax 4").exit_code == 0);
}

TEST_CASE("classify command") {
  TempDir tmp;
  const RunResult pal = run_cli("classify " + tmp.write("p.txt", "1 2 2 1\n") +
                                " --format json");
  REQUIRE(pal.exit_code == 0);
  CHECK(outputs_of(pal).at("classification") == "palindromic");

  const RunResult anti = run_cli("classify " + tmp.write("a.txt", "1 2 -2 -1\n"));
  CHECK(anti.exit_code == 0);
  CHECK(anti.output.find("antipalindromic") != std::string::npos);
}

TEST_CASE("float mode wedge parses decimals") {
  TempDir tmp;
  const std::string file = tmp.write("f.txt", "0.5 1.5\n2.0 3.0\n");
  const RunResult r = run_cli("wedge " + file + " --mode float --format json");
  REQUIRE(r.exit_code == 0);
  CHECK(outputs_of(r).at("det") == "-1.5");

  // Decimals are rejected in the default exact mode.
  CHECK(run_cli("wedge " + file).exit_code == 2);
}
