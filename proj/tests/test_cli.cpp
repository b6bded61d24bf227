// End-to-end checks of the installed command line: exit codes, golden
// documents, determinism across runs. Each invocation goes through
// std::system with stdout/stderr captured to temp files.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#ifndef FRAME_LAB_BIN
#error "FRAME_LAB_BIN must name the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() /
         ("framelab_cli_" + std::to_string(::getpid()) + "_" + name);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::string& args) {
  const fs::path out_file = temp_path("stdout.txt");
  const fs::path err_file = temp_path("stderr.txt");
  const std::string command = std::string(FRAME_LAB_BIN) + " " + args + " > " +
                              out_file.string() + " 2> " + err_file.string();
  const int status = std::system(command.c_str());
  RunResult result;
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_file);
  result.err = slurp(err_file);
  fs::remove(out_file);
  fs::remove(err_file);
  return result;
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("version flag reports and exits cleanly") {
  const auto r = run_cli("--version");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "1.0.0"));
}

TEST_CASE("a missing subcommand is a usage error") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("definitely-not-a-command").code == 2);
}

TEST_CASE("corpus lists every family") {
  const auto r = run_cli("corpus");
  CHECK(r.code == 0);
  for (const char* name : {"canonical", "halved_doubled", "summing", "fdd_random"})
    CHECK(contains(r.out, name));
}

TEST_CASE("reconstruct emits the golden error trace") {
  const auto r = run_cli("reconstruct --frame canonical:lp:1:3 --unit-vector 2");
  CHECK(r.code == 0);
  CHECK(r.out == "k,error\n0,1\n1,1\n2,0\n3,0\n");
}

TEST_CASE("reconstruct with --out splits CSV and summary") {
  const fs::path csv = temp_path("trace.csv");
  const auto r =
      run_cli("reconstruct --frame canonical:lp:1:3 --unit-vector 2 --out " +
              csv.string());
  CHECK(r.code == 0);
  CHECK(slurp(csv) == "k,error\n0,1\n1,1\n2,0\n3,0\n");
  CHECK(contains(r.out, "\"frame\": \"canonical:lp:1:3\""));
  CHECK(contains(r.out, "\"final_error\": 0.0"));
  fs::remove(csv);
}

TEST_CASE("reconstruct validates its input flags") {
  const fs::path x = temp_path("x.json");
  spit(x, "[1.0, 2.0, 3.0]");
  CHECK(run_cli("reconstruct --frame canonical:lp:1:3 --x " + x.string() +
                " --unit-vector 1")
            .code == 2);
  CHECK(run_cli("reconstruct --frame canonical:lp:1:3 --unit-vector 9").code == 2);
  CHECK(run_cli("reconstruct --frame canonical:lp:1:4 --x " + x.string()).code == 2);
  fs::remove(x);
}

TEST_CASE("besselian exact run on the running-sum basis") {
  const auto r = run_cli("besselian --frame summing:2 --method exact");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"frame\": \"summing:2\""));
  CHECK(contains(r.out, "\"value\": 3.0"));
  CHECK(contains(r.out, "\"method\": \"exact\""));
}

TEST_CASE("besselian ascent output is identical across runs") {
  const std::string args =
      "besselian --frame summing:5 --method ascent --restarts 8 --seed 9";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "\"method\": \"ascent\""));
}

TEST_CASE("oracle refusal surfaces as an input error") {
  CHECK(run_cli("besselian --frame summing:30 --method exact").code == 2);
  CHECK(run_cli("besselian --frame canonical:lp:2:4 --method exact").code == 2);
  CHECK(run_cli("besselian --frame summing:4 --method sideways").code == 2);
}

TEST_CASE("unknown ids and unreadable files are input errors") {
  CHECK(run_cli("besselian --frame no_such_family:4").code == 2);
  const fs::path bad = temp_path("bad.json");
  spit(bad, "{ this is not json");
  CHECK(run_cli("besselian --frame " + bad.string()).code == 2);
  fs::remove(bad);
  CHECK(run_cli("besselian --frame /nonexistent/frame.json").code == 2);
}

TEST_CASE("uncond pins the sweep result for a frozen input") {
  const fs::path x = temp_path("signx.json");
  spit(x, "[1.0, -1.0]");
  const auto r =
      run_cli("uncond --frame summing:2 --mode exact --x " + x.string());
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"value\": 3.0"));
  CHECK(contains(r.out, "\"witness\": \"+-\""));
  CHECK(contains(r.out, "\"evaluations\": 4"));
  CHECK(contains(r.out, "\"budget_exhausted\": false"));
  fs::remove(x);
}

TEST_CASE("uncond global mode excludes per-vector flags") {
  const auto r = run_cli("uncond --frame summing:3 --mode exact --global --samples 4");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"value\": 5.0"));
  CHECK(contains(r.out, "\"samples\": 4"));
  CHECK(run_cli("uncond --frame summing:3 --global --unit-vector 1").code == 2);
}

TEST_CASE("fdd validates and summarizes a corpus decomposition") {
  const auto r = run_cli("fdd --spec fdd_random:lp:2:4:blocks=2,2:seed=1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"label\": \"fdd_random:lp:2:4:blocks=2,2:seed=1\""));
  CHECK(contains(r.out, "\"space\": \"lp:2:4\""));
  CHECK(contains(r.out, "\"pair_count\": 8"));
  CHECK(contains(r.out, "\"auerbach\": true"));
  CHECK(!contains(r.out, "\"auerbach\": false"));
}

TEST_CASE("fdd writes a loadable frame file on request") {
  const fs::path frame_file = temp_path("built_frame.json");
  const auto r = run_cli("fdd --spec fdd_random:c0:4:blocks=2,2:seed=1 --out " +
                         frame_file.string());
  CHECK(r.code == 0);
  CHECK(contains(r.out, "\"frame_file\""));
  const auto reuse =
      run_cli("besselian --frame " + frame_file.string() + " --method exact");
  CHECK(reuse.code == 0);
  fs::remove(frame_file);
}

TEST_CASE("fdd rejects inconsistent block shapes") {
  CHECK(run_cli("fdd --spec fdd_random:lp:2:5:blocks=2,2:seed=1").code == 2);
  CHECK(run_cli("fdd --spec summing:4").code == 2);
}

TEST_CASE("profile freezes the growth table of the running-sum family") {
  const auto r = run_cli("profile --family summing --dims 2,3,4");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "dim,value,dual_value,gap,method\n"
        "2,3,3,0,exact\n"
        "3,5,5,0,exact\n"
        "4,7,7,0,exact\n");
}

TEST_CASE("report is byte-deterministic and passes on the pristine corpus") {
  const auto a = run_cli("report --seed 7");
  const auto b = run_cli("report --seed 7");
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "\"pass\": true"));
  CHECK(contains(a.out, "\"failures\": []"));
  CHECK(contains(a.out, "\"seed\": 7"));
}

TEST_CASE("report fails loudly when handed a broken frame") {
  const fs::path broken = temp_path("broken_frame.json");
  spit(broken,
       R"({"space":{"kind":"c0","dim":2},"label":"broken",)"
       R"("pairs":[{"a":[0.6,0.0],"b":[1.0,0.0]},{"a":[0.0,1.0],"b":[0.0,1.0]}]})");
  const auto r = run_cli("report --seed 7 --frame " + broken.string());
  CHECK(r.code == 1);
  CHECK(contains(r.out, "\"pass\": false"));
  CHECK(!contains(r.out, "\"failures\": []"));
  fs::remove(broken);
}
