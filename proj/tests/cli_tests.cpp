#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "bitadder/io.hpp"
#include "bitadder/verify.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(BACIRC_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::string tmp_path(const char* name) {
  return std::string("/tmp/bacirc_test_") + std::to_string(getpid()) + "_" + name;
}

}  // namespace

TEST_CASE("gen prints size and stats") {
  auto r = run("gen --func sum --n 31 --method mdfa");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("size=119") != std::string::npos);
  CHECK(r.out.find("inputs=31") != std::string::npos);

  r = run("gen --func ba --weights 0,0,0,0,0 --method mdfa");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("size=11") != std::string::npos);

  r = run("gen --func inc --n 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("size=14") != std::string::npos);
  CHECK(r.out.find("outputs=8") != std::string::npos);
}

TEST_CASE("gen writes a verifiable circuit") {
  std::string path = tmp_path("sum10.json");
  auto r = run("gen --func sum --n 10 --method mdfa --out " + path);
  CHECK(r.exit_code == 0);
  auto v = run("verify --in " + path + " --weights 0,0,0,0,0,0,0,0,0,0");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("cases=1024") != std::string::npos);
  CHECK(v.out.find("mismatches=0") != std::string::npos);

  // corrupt the file: swap an opcode nibble 6 <-> 9 in the gate list
  std::ifstream f(path);
  std::string doc((std::istreambuf_iterator<char>(f)),
                  std::istreambuf_iterator<char>());
  f.close();
  auto pos = doc.find("[6,[");
  REQUIRE(pos != std::string::npos);
  doc[pos + 1] = '9';
  std::string bad_path = tmp_path("sum10_bad.json");
  std::ofstream(bad_path) << doc;
  v = run("verify --in " + bad_path + " --weights 0,0,0,0,0,0,0,0,0,0");
  CHECK(v.exit_code == 1);
  CHECK(v.out.find("counterexample") != std::string::npos);
  std::remove(path.c_str());
  std::remove(bad_path.c_str());
}

TEST_CASE("verify over the exhaustive limit is a usage error") {
  std::string path = tmp_path("sum40.json");
  auto r = run("gen --func sum --n 40 --method mdfa --out " + path);
  CHECK(r.exit_code == 0);
  std::string weights = "0";
  for (int i = 1; i < 40; ++i) weights += ",0";
  auto v = run("verify --in " + path + " --weights " + weights);
  CHECK(v.exit_code == 2);
  // random mode is fine
  v = run("verify --in " + path + " --weights " + weights +
          " --trials 2000 --seed 7");
  CHECK(v.exit_code == 0);
  std::remove(path.c_str());
}

TEST_CASE("flag errors exit 2, guard violations exit 1") {
  CHECK(run("gen --func nope --n 5").exit_code == 2);
  CHECK(run("gen --n 5").exit_code == 2);
  CHECK(run("gen --func ba").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  // significance above the configured guard
  CHECK(run("gen --func ba --weights 0,1200000").exit_code == 1);
}

TEST_CASE("bench and dot formats") {
  std::string bpath = tmp_path("ha.bench"), dpath = tmp_path("ha.dot");
  CHECK(run("gen --func sum --n 2 --method dadda --out " + bpath +
            " --format bench").exit_code == 0);
  std::ifstream bf(bpath);
  std::string btxt((std::istreambuf_iterator<char>(bf)),
                   std::istreambuf_iterator<char>());
  CHECK(btxt.find("INPUT(x1)") != std::string::npos);
  CHECK(run("gen --func sum --n 2 --method dadda --out " + dpath +
            " --format dot").exit_code == 0);
  std::ifstream df(dpath);
  std::string dtxt((std::istreambuf_iterator<char>(df)),
                   std::istreambuf_iterator<char>());
  CHECK(dtxt.find("digraph") != std::string::npos);
  std::remove(bpath.c_str());
  std::remove(dpath.c_str());
}

TEST_CASE("printed size matches the parsed circuit's size") {
  std::string path = tmp_path("mult6.json");
  auto r = run("gen --func mult --n 6 --method mdfa --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream f(path);
  std::string doc((std::istreambuf_iterator<char>(f)),
                  std::istreambuf_iterator<char>());
  bitadder::Circuit c = bitadder::parse_json(doc);
  CHECK(r.out.find("size=" + std::to_string(c.size())) != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("tables subcommand writes csv") {
  std::string path = tmp_path("t1.csv");
  auto r = run("tables --which 1 --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream f(path);
  std::string csv((std::istreambuf_iterator<char>(f)),
                  std::istreambuf_iterator<char>());
  CHECK(csv.rfind("function,n,method,size,depth\n", 0) == 0);
  int lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 17);  // header + 8 n's x 2 methods
  CHECK(csv.find("sum,131071,mdfa,589751") != std::string::npos);
  CHECK(run("tables --which 9").exit_code == 2);
  std::remove(path.c_str());
}
