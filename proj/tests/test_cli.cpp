#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(QG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("classset command") {
  auto r = run_cli("--no-cache classset --g 2 --p 11");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("h=5") != std::string::npos);
  CHECK(r.output.find("mass 61/288") != std::string::npos);
}

TEST_CASE("invalid arguments exit with code 2") {
  CHECK(run_cli("--no-cache classset --g 2 --p 4").exit_code == 2);
  CHECK(run_cli("--no-cache classset --g 9 --p 7").exit_code == 2);
  CHECK(run_cli("--no-cache graph --kind big --g 2 --l 7 --p 7").exit_code == 2);
  CHECK(run_cli("--no-cache brandt --g 1 --p 7 --n 0").exit_code == 2);
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
}

TEST_CASE("brandt command prints the matrix") {
  auto r = run_cli("--no-cache brandt --g 1 --p 7 --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("3") != std::string::npos);
  CHECK(r.output.find("weights 4") != std::string::npos);
}

TEST_CASE("ramanujan verdicts") {
  auto yes = run_cli("--no-cache ramanujan --g 2 --l 2 --p 7");
  CHECK(yes.exit_code == 0);
  CHECK(yes.output.rfind("RAMANUJAN", 0) == 0);
  auto no = run_cli("--no-cache ramanujan --g 2 --l 2 --p 11");
  CHECK(no.exit_code == 0);
  CHECK(no.output.rfind("NOT RAMANUJAN", 0) == 0);
}

TEST_CASE("verify command exits zero on success") {
  auto r = run_cli("--no-cache verify --g 1 --p 11 --nmax 10");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
  CHECK(r.output.find("PASS") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across reruns and thread counts") {
  auto a = run_cli("--no-cache --threads 1 brandt --g 2 --p 11 --n 2");
  auto b = run_cli("--no-cache --threads 4 brandt --g 2 --p 11 --n 2");
  auto c = run_cli("--no-cache --threads 4 brandt --g 2 --p 11 --n 2");
  CHECK(a.output == b.output);
  CHECK(b.output == c.output);
}

TEST_CASE("graph emission and dot determinism") {
  std::string dir = "/tmp/qg_cli_test";
  std::string mk = "mkdir -p " + dir;
  REQUIRE(std::system(mk.c_str()) == 0);
  auto r1 = run_cli("--no-cache graph --kind little --g 1 --l 2 --p 11 --dot " +
                    dir + "/a.dot --json " + dir + "/a.json");
  CHECK(r1.exit_code == 0);
  auto r2 = run_cli("--no-cache graph --kind little --g 1 --l 2 --p 11 --dot " +
                    dir + "/b.dot");
  CHECK(r2.exit_code == 0);
  std::ifstream fa(dir + "/a.dot"), fb(dir + "/b.dot");
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(sa.str().rfind("digraph", 0) == 0);
}

TEST_CASE("disk cache round trip and corruption recovery") {
  std::string dir = "/tmp/qg_cli_cache_test";
  std::string rmmk = "rm -rf " + dir + " && mkdir -p " + dir;
  REQUIRE(std::system(rmmk.c_str()) == 0);
  auto first = run_cli("--cache-dir " + dir + " classset --g 1 --p 11");
  CHECK(first.exit_code == 0);
  auto cached = run_cli("--cache-dir " + dir + " classset --g 1 --p 11");
  CHECK(cached.exit_code == 0);
  CHECK(first.output == cached.output);
  // corrupt the entry; the CLI must warn and recompute
  std::string corrupt = "echo garbage > " + dir + "/classset-g1-p11.json";
  REQUIRE(std::system(corrupt.c_str()) == 0);
  auto recovered = run_cli("--cache-dir " + dir + " classset --g 1 --p 11");
  CHECK(recovered.exit_code == 0);
  CHECK(recovered.output.find("h=2") != std::string::npos);
  CHECK(recovered.output.find("corrupted") != std::string::npos);
}

TEST_CASE("survey lists ramanujan rows") {
  auto r = run_cli("--no-cache survey --g 2 --l 2 --pmax 7");
  CHECK(r.exit_code == 0);
  // p = 3 single vertex, p = 5 and 7 two-vertex ramanujan
  CHECK(r.output.find("2,2,3,1,") != std::string::npos);
  CHECK(r.output.find("2,2,5,2,") != std::string::npos);
  CHECK(r.output.find("2,2,7,2,15,true") != std::string::npos);
}
