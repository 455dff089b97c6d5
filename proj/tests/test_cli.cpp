#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"

using namespace nhosc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "nhosc_cli_tests";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("spectrum matches the golden table") {
  const Run r = run_cli({"spectrum", "--nmax", "3", "--lambda", "2", "--b", "1/2", "--omega", "1/3"});
  CHECK(r.code == 0);
  CHECK(r.out == slurp(fs::path(NHOSC_TEST_DATA_DIR) / "spectrum_n3.json"));
}

TEST_CASE("build output matches the golden cells file and is deterministic") {
  const fs::path dir = scratch_dir();
  const std::vector<std::string> args = {"build", "--lambda", "2", "--b", "1/2", "--omega", "1/3", "--nmax", "2",
                                         "--out"};
  auto with_out = [&](const fs::path& p) {
    auto a = args;
    a.push_back(p.string());
    return a;
  };
  CHECK(run_cli(with_out(dir / "a.json")).code == 0);
  CHECK(run_cli(with_out(dir / "b.json")).code == 0);
  const std::string a = slurp(dir / "a.json");
  CHECK(a == slurp(dir / "b.json"));
  CHECK(a == slurp(fs::path(NHOSC_TEST_DATA_DIR) / "cells_n2.json"));
}

TEST_CASE("build rejects b = 0 with exit code 2") {
  const Run r = run_cli({"build", "--b", "0", "--nmax", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("singular") != std::string::npos);
  CHECK(run_cli({"build", "--b", "0", "--nmax", "0"}).code == 0);
}

TEST_CASE("bad arguments exit with code 1") {
  CHECK(run_cli({"build", "--lambda", "0.5"}).code == 1);
  CHECK(run_cli({"build", "--lambda", "-2"}).code == 1);
  CHECK(run_cli({"verify", "--cells", "/nonexistent/cells.json"}).code == 1);
  CHECK(run_cli({"frobnicate"}).code == 1);
}

TEST_CASE("verify passes on a fresh build and reports the discrepancies as WARN") {
  const fs::path dir = scratch_dir();
  REQUIRE(run_cli({"build", "--nmax", "2", "--out", (dir / "fresh.json").string()}).code == 0);
  const Run r = run_cli({"verify", "--cells", (dir / "fresh.json").string(), "--nmax-moment", "4"});
  CHECK(r.code == 0);
  const Json report = parse_json(r.out)["report"];
  CHECK(report["passed"] == true);
  std::vector<std::string> warns;
  for (const auto& c : report["checks"]) {
    if (c["status"] == "WARN") warns.push_back(c["name"]);
  }
  CHECK(std::find(warns.begin(), warns.end(), "discrepancy.ladder_constant") != warns.end());
  CHECK(std::find(warns.begin(), warns.end(), "discrepancy.moment_table") != warns.end());
}

TEST_CASE("verify names the check broken by a corrupted coefficient") {
  const fs::path dir = scratch_dir();
  REQUIRE(run_cli({"build", "--nmax", "2", "--out", (dir / "bad.json").string()}).code == 0);
  Json cells = parse_json(slurp(dir / "bad.json"));
  cells["cells"][2]["chain"][2]["poly"][0]["re"] = "7/3";
  std::ofstream(dir / "bad.json", std::ios::binary) << dump(cells);
  const Run r = run_cli({"verify", "--cells", (dir / "bad.json").string(), "--no-numeric"});
  CHECK(r.code == 4);
  CHECK(r.err.find("cell[2].") != std::string::npos);
}

TEST_CASE("gram report") {
  const fs::path dir = scratch_dir();
  REQUIRE(run_cli({"build", "--nmax", "3", "--out", (dir / "g.json").string()}).code == 0);
  const Run r = run_cli({"gram", "--cells", (dir / "g.json").string()});
  CHECK(r.code == 0);
  const Json doc = parse_json(r.out);
  CHECK(doc["unit"] == "×π");
  CHECK(doc["gram"]["indices"].size() == 10);
  CHECK(doc["jordan"]["entries"][1][2]["re"] == "1/1");
  CHECK(doc["jordan"]["entries"][1][1]["re"] == "8/1");
}

TEST_CASE("validate emits a moment table") {
  const Run r = run_cli({"validate", "--nmax-moment", "3", "--tol", "1e-8"});
  CHECK(r.code == 0);
  const Json doc = parse_json(r.out);
  CHECK(doc["moments"].size() == 16);
  CHECK(doc["moments"][5]["exact"]["re"] == "1/4");  // (1,1)
  CHECK(doc["report"]["passed"] == true);
}
