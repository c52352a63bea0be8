#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "g1rank/cli.hpp"

using namespace g1rank;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& contents) {
    char name[] = "/tmp/g1rank_test_XXXXXX";
    int fd = mkstemp(name);
    REQUIRE(fd >= 0);
    close(fd);
    path = name;
    std::ofstream f(path);
    f << contents;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("analyze") {
  CliRun r = run({"analyze", "sl2_3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("R=5 P=6 diff=1") != std::string::npos);

  r = run({"analyze", "cyclic:1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("R=0 P=0 diff=0") != std::string::npos);

  r = run({"--output", "json", "analyze", "sl2_3"});
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["R"] == 5);
  CHECK(j["P"] == 6);
  CHECK(j["difference"] == 1);
}

TEST_CASE("chartab") {
  CliRun r = run({"chartab", "sl2_3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dixon prime: 13") != std::string::npos);
  CHECK(r.out.find("size:") != std::string::npos);
  CHECK(r.out.find("order:") != std::string::npos);
  CHECK(r.out.find("Q(z3)") != std::string::npos);

  r = run({"--output", "json", "chartab", "cyclic:2"});
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["characters"].size() == 2);
}

TEST_CASE("scan") {
  TempFile catalog(
      "C2 := (1,2)\n"
      "S3 := (1,2), (1,2,3)\n");
  CliRun r = run({"scan", "--catalog", catalog.path});
  CHECK(r.code == 0);
  CHECK(r.out.find("violators: 0") != std::string::npos);

  r = run({"scan", "--catalog", catalog.path, "--max-order", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("skipped") != std::string::npos);

  r = run({"scan", "--catalog", "/nonexistent/file.grp"});
  CHECK(r.code == 1);
  CHECK(!r.err.empty());
}

TEST_CASE("scan of the shipped order-<24 catalog reports no violators") {
  CliRun r = run({"scan", "--catalog", "catalog/order_lt24.grp"});
  CHECK(r.code == 0);
  CHECK(r.out.find("violators: 0") != std::string::npos);
  CHECK(r.out.find("error") == std::string::npos);
}

TEST_CASE("split") {
  CliRun r = run({"split", "--level", "12", "--stabilizer", "7",
                  "--prime", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("field: Q(z3)") != std::string::npos);
  CHECK(r.out.find("g: 1") != std::string::npos);

  r = run({"--output", "json", "split", "--level", "3", "--prime", "7"});
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["primes_above"] == 2);
  CHECK(j["field"] == "Q(z3)");

  r = run({"split", "--level", "12", "--stabilizer", "4", "--prime", "3"});
  CHECK(r.code == 2);  // 4 is not a unit mod 12 -> usage error
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"unknown"}).code == 2);
  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"analyze", "cyclic:0"}).code == 2);
  CHECK(run({"analyze", "dihedral:7"}).code == 2);
  CHECK(run({"analyze", "nosuch:3"}).code == 2);
  CHECK(run({"--output", "yaml", "analyze", "sl2_3"}).code == 2);
}

TEST_CASE("computation errors exit with 1") {
  CHECK(run({"--cap", "10", "analyze", "symmetric:5"}).code == 1);
}

TEST_CASE("byte-identical output across runs") {
  CliRun a = run({"analyze", "sl2_3"});
  CliRun b = run({"analyze", "sl2_3"});
  CHECK(a.out == b.out);
  CliRun ja = run({"--output", "json", "analyze", "symmetric:4"});
  CliRun jb = run({"--output", "json", "analyze", "symmetric:4"});
  CHECK(ja.out == jb.out);
}

TEST_CASE("help exits zero") {
  CHECK(run({"--help"}).code == 0);
}
