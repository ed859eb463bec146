// Drives the built selfcent binary through std::system.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

const fs::path& workdir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("selfcent-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const auto out = workdir() / "stdout.txt";
  const std::string cmd = std::string(SELFCENT_CLI) + " " + args + " > " + out.string() + " 2> " +
                          (workdir() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string write(const std::string& name, const std::string& text) {
  const auto p = workdir() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string construct(const std::string& name, const std::string& descriptor) {
  const auto desc = write(name + ".json", descriptor);
  const auto tbl = (workdir() / (name + ".tbl")).string();
  REQUIRE(run("construct " + desc + " " + tbl).code == 0);
  return tbl;
}

}  // namespace

TEST_CASE("construct writes a table and echoes invariants") {
  const auto desc = write("q8.json", R"({"family":"quaternion","k":3})");
  const auto tbl = (workdir() / "q8.tbl").string();
  const auto r = run("construct " + desc + " " + tbl);
  CHECK(r.code == 0);
  CHECK(r.out.find("order 8") != std::string::npos);
  CHECK(r.out.find("exponent 4") != std::string::npos);
  CHECK(r.out.find("class 2") != std::string::npos);
  std::ifstream in(tbl);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 9);

  const auto king = construct("m16", R"({"family":"king","p":2,"m":3,"n":1,"s":0,"c":1,"eps":1})");
  std::ifstream kin(king);
  std::size_t n = 0;
  kin >> n;
  CHECK(n == 16);
}

TEST_CASE("construct rejects an inconsistent pc presentation") {
  const auto desc = write("bad.json", R"({"family":"pc","p":2,"relative_orders":[2,2,2],
      "powers":[[[2,1]],[],[]],"commutators":[{"i":2,"j":1,"word":[[3,1]]}]})");
  CHECK(run("construct " + desc + " " + (workdir() / "bad.tbl").string()).code != 0);
  CHECK(run("construct " + write("junk.json", "{not json") + " x.tbl").code == 2);
}

TEST_CASE("check exit codes") {
  const auto q8 = construct("Q8", R"({"family":"quaternion","order":8})");
  const auto d12 = construct("D12", R"({"family":"dihedral","order":12})");
  CHECK(run("check " + q8).code == 0);
  const auto r = run("check " + d12 + " --method pairs");
  CHECK(r.code == 1);
  const auto j = Json::parse(r.out);
  CHECK(j["verdict"] == "not-in-A");
  CHECK(j["witness"]["subgroup"].size() == 6);
  CHECK(run("check " + d12 + " --method all").code == 1);
  CHECK(run("check " + write("trunc.tbl", "4\n0 1 2 3\n1 0\n")).code == 2);
  CHECK(run("check " + (workdir() / "missing.tbl").string()).code == 2);
}

TEST_CASE("check output matches in-process cross_check field by field") {
  const auto tbl = construct("C2xS3", R"({"family":"direct","factors":[{"family":"cyclic","n":2},
      {"family":"symmetric","degree":3}]})");
  const auto brute = Json::parse(run("check " + tbl + " --method bruteforce").out);
  const auto all = Json::parse(run("check " + tbl + " --method all").out);
  REQUIRE(all["reports"].size() == 4);
  auto a = brute, b = all["reports"][0];
  a.erase("stats");
  b.erase("stats");
  CHECK(a == b);
}

TEST_CASE("survey streams one record per group") {
  const auto r = run("survey --family maxclass --p 2 --max-order 128");
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    const auto j = Json::parse(line);
    CHECK(j["membership"]["verdict"] == "in-A");
    ++count;
  }
  CHECK(count == 16);  // C4, C2^2 and D, SD, Q from order 8 to 128
  const auto csv = run("survey --family abelian --max-order 64 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.find("not-in-A") == std::string::npos);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify --theorem metacyclic-in-A --p 5 --max-order 625").code == 0);
  CHECK(run("verify --theorem maxclass-p1 --p 3 --n 4").code == 3);
  const auto r = run("verify --theorem maxclass-p1 --p 5 --n 5");
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  for (const auto& d : j["directions"]) CHECK(d["matched"].get<int>() >= 1);
  const auto e = run("verify --theorem exponent-p --p 3 --max-order 243");
  CHECK(e.code == 0);
  CHECK(Json::parse(e.out)["counterexamples"].empty());
  CHECK(run("verify --theorem nonsense").code == 2);
}
