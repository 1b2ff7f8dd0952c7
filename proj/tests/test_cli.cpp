#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef GUP_CLI_PATH
#error "GUP_CLI_PATH must point at the gup binary"
#endif

namespace {

namespace fs = std::filesystem;

std::string cli() { return GUP_CLI_PATH; }

int run(const std::string& args, const std::string& stderr_file = "") {
  std::string cmd = "\"" + cli() + "\" " + args;
  if (!stderr_file.empty()) cmd += " 2>" + stderr_file;
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::path("cli_test_out") / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("happy path writes table and manifest") {
  auto dir = fresh_dir("basic");
  CHECK(run("--out-dir " + dir.string() + " gup --state maxloc --xi 0") == 0);
  CHECK(fs::exists(dir / "gup.csv"));
  CHECK(fs::exists(dir / "gup_manifest.json"));

  const std::string csv = slurp(dir / "gup.csv");
  CHECK(csv.find("# tool: gup") != std::string::npos);
  CHECK(csv.find("# config_hash: fnv1a64:") != std::string::npos);
  CHECK(csv.find("state,mean_X") != std::string::npos);
  CHECK(csv.find("maxloc") != std::string::npos);

  auto manifest = nlohmann::json::parse(slurp(dir / "gup_manifest.json"));
  CHECK(manifest["tool"] == "gup");
  CHECK(manifest["experiment"] == "gup");
  CHECK(manifest["config"]["beta"] == 1.0);
  CHECK(manifest["config"]["state"] == "maxloc");
  CHECK(manifest["outputs"][0] == "gup.csv");
}

TEST_CASE("config echo round-trips numeric fields losslessly") {
  auto dir = fresh_dir("roundtrip");
  CHECK(run("--out-dir " + dir.string() +
            " --beta 0.3141592653589793 --rel-tol 1e-9 parseval --eps 0.12345 --n-list 5") == 0);
  auto manifest = nlohmann::json::parse(slurp(dir / "parseval_manifest.json"));
  CHECK(manifest["config"]["beta"].get<double>() == 0.3141592653589793);
  CHECK(manifest["config"]["rel_tol"].get<double>() == 1e-9);
  CHECK(manifest["config"]["eps"].get<double>() == 0.12345);
}

TEST_CASE("identical configs produce byte-identical outputs") {
  auto dir = fresh_dir("determinism");
  const std::string args = "--out-dir " + dir.string() + " ml-overlaps";
  CHECK(run(args) == 0);
  const std::string first_table = slurp(dir / "ml-overlaps.csv");
  const std::string first_manifest = slurp(dir / "ml-overlaps_manifest.json");
  CHECK(run(args) == 0);
  CHECK(slurp(dir / "ml-overlaps.csv") == first_table);
  CHECK(slurp(dir / "ml-overlaps_manifest.json") == first_manifest);
}

TEST_CASE("config errors exit 2 with machine-readable json") {
  auto dir = fresh_dir("config_err");
  const std::string errfile = (dir / "stderr.txt").string();
  CHECK(run("--out-dir " + dir.string() + " gram --eps 7", errfile) == 2);
  auto err = nlohmann::json::parse(slurp(errfile));
  CHECK(err["error"] == "config");

  CHECK(run("--out-dir " + dir.string() + " gram --n nonsense", errfile) == 2);
  CHECK(run("no-such-experiment", errfile) == 2);
  CHECK(run("--format yaml parseval", errfile) == 2);
}

TEST_CASE("quadrature failures exit 3 and flag the table") {
  auto dir = fresh_dir("numerical_err");
  const std::string errfile = (dir / "stderr.txt").string();
  CHECK(run("--out-dir " + dir.string() + " gram --family kmm-eigen --measure standard --n 0..1",
            errfile) == 3);
  auto err = nlohmann::json::parse(slurp(errfile));
  CHECK(err["error"] == "numerical");
  const std::string csv = slurp(dir / "gram.csv");
  CHECK(csv.find("# status: failed:") != std::string::npos);
}

TEST_CASE("gram table reports the identity deviation") {
  auto dir = fresh_dir("gram");
  CHECK(run("--out-dir " + dir.string() +
            " gram --family sym-eigen --measure standard --eps 0.37 --n -20..20") == 0);
  const std::string csv = slurp(dir / "gram.csv");
  const auto pos = csv.find("# max_deviation_from_identity: ");
  REQUIRE(pos != std::string::npos);
  const double dev = std::stod(csv.substr(pos + 31));
  CHECK(dev <= 1e-8);
  auto manifest = nlohmann::json::parse(slurp(dir / "gram_manifest.json"));
  CHECK(manifest["rows"].get<int>() == 41 * 41);
}

TEST_CASE("vacuum selectors") {
  auto dir = fresh_dir("vacuum");
  CHECK(run("--out-dir " + dir.string() + " vacuum --mass 0 --modified") == 0);
  const std::string csv = slurp(dir / "vacuum.csv");
  CHECK(csv.find("density,modified,inf,0.00633257397765") != std::string::npos);
  CHECK(csv.find("unmodified") == std::string::npos);

  const std::string errfile = (dir / "stderr.txt").string();
  CHECK(run("--out-dir " + dir.string() + " vacuum --unmodified", errfile) == 2);

  CHECK(run("--out-dir " + dir.string() + " vacuum --unmodified --cutoff 10") == 0);
  const std::string csv2 = slurp(dir / "vacuum.csv");
  CHECK(csv2.find("# scan_slope: 4") != std::string::npos);
  CHECK(csv2.find("density,modified") == std::string::npos);
}

TEST_CASE("json format emits a parseable table") {
  auto dir = fresh_dir("jsonfmt");
  CHECK(run("--out-dir " + dir.string() + " --format json vacuum --mass 0") == 0);
  auto table = nlohmann::json::parse(slurp(dir / "vacuum.json"));
  CHECK(table["columns"].size() == 5);
  CHECK(table["rows"].size() >= 6);
  CHECK(table["metadata"].contains("scan_slope"));
}

TEST_CASE("profiles skips the eigenstate singularity without failing") {
  auto dir = fresh_dir("profiles");
  CHECK(run("--out-dir " + dir.string() +
            " profiles --state sym-eigen --xi 0 --x-min -1 --x-max 1 --x-count 5 "
            "--mode exact") == 0);
  const std::string csv = slurp(dir / "profiles.csv");
  CHECK(csv.find("skipped:singular-at-xi") != std::string::npos);
  CHECK(csv.find("ok") != std::string::npos);
}
