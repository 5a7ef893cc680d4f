#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pruning/csv.hpp"
#include "pruning/generate.hpp"

using namespace pruning;
using Json = nlohmann::json;

namespace {

const char* cli_path() { return PARETOPRUNE_CLI_PATH; }

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const auto out_path = std::filesystem::temp_directory_path() /
                        ("cli_out_" + std::to_string(counter++) + ".txt");
  const std::string command =
      std::string(cli_path()) + " " + args + " > " + out_path.string() + " 2>/dev/null";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  result.stdout_text = buffer.str();
  return result;
}

std::filesystem::path write_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("prune on a compiled fixture reproduces the known optimum") {
  const RunResult res = run_cli(
      "--format json prune fixture:prop-unic-not-monotonic-A --measure coverage --k 2");
  REQUIRE(res.exit_code == 0);
  const Json out = Json::parse(res.stdout_text);
  CHECK(out["optimal_value"] == "6");
  CHECK(out["measure"] == "coverage");
  CHECK(out["k"] == 2);
}

TEST_CASE("prune with a full-percentage budget selects everything") {
  const RunResult res = run_cli(
      "--format json prune fixture:prop-unic-not-monotonic-A --measure coverage --k 100%");
  REQUIRE(res.exit_code == 0);
  const Json out = Json::parse(res.stdout_text);
  CHECK(out["k"] == 4);
  CHECK(out["optimal_value"] == "0");
}

TEST_CASE("prune cross-solver agreement on a random file") {
  Rng rng(61);
  const Instance inst = random_pareto_2d(rng, 12, 50, "cli-rand");
  const auto path = std::filesystem::temp_directory_path() / "cli_rand.csv";
  {
    std::ofstream out(path);
    emit_csv(inst, out);
  }
  const RunResult brute = run_cli("--format json prune " + path.string() +
                                  " --measure dcoverage --k 3 --solver brute");
  const RunResult exact = run_cli("--format json prune " + path.string() +
                                  " --measure dcoverage --k 3 --solver exact");
  REQUIRE(brute.exit_code == 0);
  REQUIRE(exact.exit_code == 0);
  CHECK(Json::parse(brute.stdout_text)["optimal_value"] ==
        Json::parse(exact.stdout_text)["optimal_value"]);
  CHECK(Json::parse(brute.stdout_text)["slate"] == Json::parse(exact.stdout_text)["slate"]);
}

TEST_CASE("evaluate scores a slate file") {
  const auto csv = write_file("cli_eval.csv", "o1,o2\n0,1\n2,0\n");
  const auto slate = write_file("cli_eval_slate.txt", "1\n");
  const RunResult res = run_cli("--format json evaluate " + csv.string() + " --slate " +
                                slate.string() + " --measures dcoverage");
  REQUIRE(res.exit_code == 0);
  CHECK(Json::parse(res.stdout_text)["dcoverage"] == "1");

  // Full-set slate covers everything.
  const auto full = write_file("cli_eval_full.txt", "0 1\n");
  const RunResult zero = run_cli("--format json evaluate " + csv.string() + " --slate " +
                                 full.string() + " --measures coverage");
  REQUIRE(zero.exit_code == 0);
  CHECK(Json::parse(zero.stdout_text)["coverage"] == "0");

  // Uniformity of a singleton slate is a contract error (exit 2).
  const RunResult bad = run_cli("evaluate " + csv.string() + " --slate " + slate.string() +
                                " --measures uniformity");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("axioms fixture suite matches the expected matrix") {
  const RunResult res = run_cli("--format json axioms --fixture all");
  REQUIRE(res.exit_code == 0);
  const Json rows = Json::parse(res.stdout_text);
  CHECK(rows.size() == 15);
  for (const Json& row : rows) {
    CHECK(row["verdict_matches"] == true);
    CHECK(row["values_match"] == true);
  }
}

TEST_CASE("axioms random mode reports zero violations for a satisfied cell") {
  const RunResult res = run_cli(
      "--format json --seed 17 axioms --random --axiom standout --measure dcoverage "
      "--trials 50");
  REQUIRE(res.exit_code == 0);
  const Json out = Json::parse(res.stdout_text);
  CHECK(out["violated"] == 0);
  CHECK(out["holds"].get<int>() + out["not_applicable"].get<int>() == 50);
}

TEST_CASE("embed subcommand emits a valid instance") {
  const auto pts = write_file("cli_embed.csv", "o1,o2\n0,0\n1,2\n-3,1\n");
  const RunResult res = run_cli("embed " + pts.string() + " --transform lift");
  REQUIRE(res.exit_code == 0);
  std::istringstream in(res.stdout_text);
  const IngestResult parsed = ingest_csv_stream(in, ValidationMode::strict, "lifted");
  CHECK(parsed.instance.n() == 3);
  CHECK(parsed.instance.d() == 4);
}

TEST_CASE("exit codes distinguish input errors from budget exhaustion") {
  CHECK(run_cli("prune /nonexistent.csv --measure coverage --k 1").exit_code == 2);
  CHECK(run_cli("prune fixture:nope --measure coverage --k 1").exit_code == 2);

  Rng rng(62);
  const Instance inst = random_lift_4d(rng, 12, 60, "cli-budget");
  const auto path = std::filesystem::temp_directory_path() / "cli_budget.csv";
  {
    std::ofstream out(path);
    emit_csv(inst, out);
  }
  const RunResult budget = run_cli("prune " + path.string() +
                                   " --measure coverage --k 4 --solver exact --node-budget 2");
  CHECK(budget.exit_code == 3);
}

TEST_CASE("bench runs the bundled fronts end to end") {
  const auto out_dir = std::filesystem::temp_directory_path() / "cli_bench";
  std::filesystem::remove_all(out_dir);
  const RunResult res =
      run_cli("--format json --seed 3 bench --bundled --out " + out_dir.string());
  REQUIRE(res.exit_code == 0);
  CHECK(std::filesystem::exists(out_dir / "report.json"));
  CHECK(std::filesystem::exists(out_dir / "report.csv"));
  CHECK(std::filesystem::exists(out_dir / "aggregates.csv"));

  std::ifstream in(out_dir / "report.json");
  const Json rows = Json::parse(in);
  CHECK(rows.size() == 27);  // 3 instances x 3 k levels x 3 methods
  for (const Json& row : rows) {
    CHECK(row["complete"] == true);
    const std::string method = row["method"];
    const char* own = method == "uniformity"   ? "uniformity"
                      : method == "coverage"   ? "coverage"
                                               : "dcoverage";
    CHECK(row["normalized"][own] == 100);
  }
}
