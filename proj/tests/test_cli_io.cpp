#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qpc/character.hpp"

using namespace qpc;
namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
  fs::path d = fs::temp_directory_path() / "qpchar_cli_test";
  fs::create_directories(d);
  return d;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

struct CliRun {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

CliRun run_cli(const std::string& args) {
  fs::path cap = work_dir() / "capture.txt";
  std::string cmd =
      std::string(QPCHAR_CLI_PATH) + " " + args + " > " + cap.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  CliRun r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(cap);
  std::ostringstream os;
  os << in.rdbuf();
  r.output = os.str();
  return r;
}

fs::path a2_file() {
  fs::path p = work_dir() / "a2.json";
  write_file(p, quiver_to_json(Quiver(2, {{1, 2, "a"}})));
  return p;
}

}  // namespace

TEST_CASE("emitted files re-parse to equal values") {
  Quiver cyc(3, {{1, 2, "a"}, {2, 3, "b"}, {3, 1, "c"}});
  CHECK(quiver_from_json(quiver_to_json(cyc)) == cyc);

  PathSeries s(cyc, kDefaultTruncDegree);
  s.add_term(Path{1, {"a", "b", "c"}}, Rat(1));
  Potential w(std::move(s));
  Potential back =
      potential_from_json(cyc, potential_to_json(w), kDefaultTruncDegree);
  CHECK(back.series() == w.series());

  for (const auto& ex : shipped_extension_examples("a3")) {
    Representation m = ex.e.module;
    Representation mback =
        representation_from_json(m.quiver, representation_to_json(m));
    CHECK(mback.dims == m.dims);
    for (const auto& a : m.quiver.arrows())
      CHECK(mback.matrix(a.label) == m.matrix(a.label));

    SESData sback = ses_from_json(m.quiver, ses_to_json(ex.ses));
    CHECK_NOTHROW(validate_ses(sback));
    CHECK(ses_to_json(sback) == ses_to_json(ex.ses));
  }
}

TEST_CASE("mutate-quiver golden invocation") {
  CliRun r = run_cli("mutate-quiver -q " + a2_file().string() + " --seq 1");
  CHECK(r.exit_code == 0);
  CHECK(quiver_from_json(r.output) == Quiver(2, {{2, 1, "a*"}}));
}

TEST_CASE("identical invocations are byte-identical") {
  std::string args = "bfs -q " + a2_file().string() + " --depth 6 --format json";
  CliRun first = run_cli(args);
  CliRun second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.find("\"closed\": true") != std::string::npos);
}

TEST_CASE("char invocation matches the library value") {
  Representation s1{Quiver(2, {{1, 2, "a"}}), {1, 0}, {}};
  fs::path mp = work_dir() / "s1.json";
  write_file(mp, representation_to_json(s1));
  CliRun r = run_cli("char -q " + a2_file().string() + " -m " + mp.string() +
                     " -g -1,1");
  CHECK(r.exit_code == 0);
  LaurentPoly expect = character({s1, {-1, 1}});
  CHECK(r.output == expect.to_string(default_var_names(2)) + "\n");
}

TEST_CASE("dichotomy invocation on shipped extension data") {
  auto ex = shipped_extension_examples("a2").at(0);
  fs::path sp = work_dir() / "ses_a2.json";
  write_file(sp, ses_to_json(ex.ses));
  CliRun r = run_cli("dichotomy -q " + a2_file().string() + " -s " + sp.string());
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("dichotomy yes") != std::string::npos);
  CHECK(r.output.find("NO") == std::string::npos);
}

TEST_CASE("exit codes distinguish usage and domain errors") {
  CHECK(run_cli("no-such-subcommand").exit_code == 2);
  CHECK(run_cli("mutate-quiver --seq 1").exit_code == 2);  // missing -q
  // vertex out of range is a domain error
  CliRun r = run_cli("mutate-quiver -q " + a2_file().string() + " --seq 7");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("error:") != std::string::npos);
  // unreadable input file
  CHECK(run_cli("mutate-quiver -q /nonexistent.json").exit_code == 1);
}

TEST_CASE("verify suite exit code") {
  CliRun r = run_cli("verify --suite cycle3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
  CHECK(run_cli("verify --suite nope").exit_code == 1);
}
