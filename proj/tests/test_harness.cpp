#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pruning/csv.hpp"
#include "pruning/experiment.hpp"
#include "pruning/generate.hpp"
#include "pruning/measures.hpp"
#include "test_support.hpp"

using namespace pruning;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("csv ingestion basics") {
  // One dominated row, lenient: filtered with a warning.
  const auto path = temp_file("ingest1.csv", "o1,o2\n1,0\n0,1\n0,0\n");
  const IngestResult lenient = ingest_csv(path, ValidationMode::lenient);
  CHECK(lenient.instance.n() == 2);
  CHECK(lenient.report.dominated_removed == 1);

  CHECK_THROWS_AS(ingest_csv(path, ValidationMode::strict), InputError);

  const auto empty = temp_file("ingest2.csv", "");
  CHECK_THROWS_AS(ingest_csv(empty, ValidationMode::lenient), InputError);

  const auto bad_header = temp_file("ingest3.csv", "a,b\n1,2\n");
  CHECK_THROWS_AS(ingest_csv(bad_header, ValidationMode::lenient), InputError);

  const auto bad_row = temp_file("ingest4.csv", "o1,o2\n1,x\n");
  try {
    ingest_csv(bad_row, ValidationMode::lenient);
    FAIL("expected a parse error");
  } catch (const InputError& error) {
    CHECK(std::string(error.what()).find(":2:") != std::string::npos);  // line number
  }
}

TEST_CASE("csv decimals are scaled exactly") {
  const auto path = temp_file("ingest5.csv", "o1,o2\n0.5,1\n1.25,0\n");
  const IngestResult result = ingest_csv(path, ValidationMode::strict);
  const Instance& inst = result.instance;
  CHECK(inst.scale == 4);  // lowest common denominator of .5 and .25
  CHECK(inst.value_at(0, 0) == Rational(1, 2));
  CHECK(inst.value_at(1, 0) == Rational(5, 4));

  // Scientific notation parses exactly too.
  const auto sci = temp_file("ingest6.csv", "o1\n1.5e2\n2e1\n");
  CHECK_THROWS_AS(ingest_csv(sci, ValidationMode::strict), InputError);  // 150 dominates 20
  const IngestResult only = ingest_csv(sci, ValidationMode::lenient);
  CHECK(only.instance.n() == 1);
  CHECK(only.instance.value_at(0, 0) == Rational(150));
}

TEST_CASE("csv round-trip reproduces the identical instance") {
  Rng rng(51);
  for (int round = 0; round < 10; ++round) {
    const Instance inst = round % 2 == 0 ? random_pareto_2d(rng, 12, 99)
                                         : random_plane_3d(rng, 10, 40);
    std::ostringstream out;
    emit_csv(inst, out);
    std::istringstream in(out.str());
    const IngestResult back = ingest_csv_stream(in, ValidationMode::strict, inst.name);
    CHECK(back.instance.alternatives == inst.alternatives);
    CHECK(back.instance.scale == inst.scale);
    CHECK(back.instance.name == inst.name);
  }
}

TEST_CASE("objective kind inference") {
  const auto path = temp_file("ingest7.csv", "o1,o2,o3\n1,3,0.5\n0,1,0.75\n1,2,0.25\n");
  // Column 1 is 0/1, column 2 is a permutation of 1..3, column 3 neither.
  // Rows must be mutually non-dominating: (1,3,0.5),(0,1,0.75)? (1,3,0.5)
  // vs (1,2,0.25): dominates. Use lenient and inspect what survives.
  const IngestResult result = ingest_csv(path, ValidationMode::lenient);
  const Instance& inst = result.instance;
  if (inst.n() == 3) {
    CHECK(inst.kinds[0] == ObjectiveKind::approval);
    CHECK(inst.kinds[1] == ObjectiveKind::ordinal);
    CHECK(inst.kinds[2] == ObjectiveKind::cardinal);
  }
}

TEST_CASE("approval instances are recognized for the approval solver") {
  const auto path = temp_file("ingest8.csv", "o1,o2,o3\n1,0,1\n0,1,1\n1,1,0\n");
  const IngestResult result = ingest_csv(path, ValidationMode::strict);
  CHECK(result.instance.all_approval());
}

TEST_CASE("decimal rendering") {
  CHECK(decimal_string(11, 10) == "1.1");
  CHECK(decimal_string(-7, 4) == "-1.75");
  CHECK(decimal_string(14, 8) == "1.75");
  CHECK(decimal_string(5, 1) == "5");
  CHECK(decimal_string(0, 8) == "0");
  CHECK_THROWS_AS(decimal_string(1, 3), InputError);  // not decimal-exact
}

TEST_CASE("subsample behavior") {
  Rng rng(52);
  const Instance small = random_pareto_2d(rng, 150, 100000);
  CHECK(subsample(small, 200, 7).alternatives == small.alternatives);

  const Instance big = random_pareto_2d(rng, 500, 100000);
  const Instance once = subsample(big, 200, 7);
  const Instance again = subsample(big, 200, 7);
  CHECK(once.n() == 200);
  CHECK(once.alternatives == again.alternatives);  // deterministic in seed

  const Instance other_seed = subsample(big, 200, 8);
  CHECK(once.alternatives != other_seed.alternatives);

  // Subset property: every sampled point is in the parent instance.
  for (int i = 0; i < once.n(); ++i) {
    CHECK(find_point(big, once.alt(i), once.scale) >= 0);
  }
}

TEST_CASE("k from percent rounds half up with a floor of one") {
  CHECK(k_from_percent(5, 200) == 10);
  CHECK(k_from_percent(10, 36) == 4);   // 3.6 rounds up
  CHECK(k_from_percent(25, 36) == 9);
  CHECK(k_from_percent(5, 36) == 2);    // 1.8 rounds up
  CHECK(k_from_percent(1, 10) == 1);    // 0.1 floors to 1
  CHECK(k_from_percent(5, 30) == 2);    // 1.5 rounds half up
  CHECK_THROWS_AS(k_from_percent(0, 10), InputError);
  CHECK_THROWS_AS(k_from_percent(101, 10), InputError);
}

TEST_CASE("experiment on a synthetic two-objective front") {
  Rng rng(53);
  const Instance front = random_pareto_2d(rng, 40, 500, "front40");
  const auto path = std::filesystem::temp_directory_path() / "front40.csv";
  {
    std::ofstream out(path);
    emit_csv(front, out);
  }

  ExperimentConfig config;
  config.datasets = {path};
  config.k_percents = {10, 25, 50};
  config.seed = 5;
  const ReportTable table = run_experiment(config);
  CHECK(table.all_complete);
  REQUIRE(table.rows.size() == 9);

  for (const ReportRow& row : table.rows) {
    REQUIRE(row.complete);
    REQUIRE(row.raw.has_value());

    // Own-measure normalized cell is exactly 100%.
    switch (row.method) {
      case MeasureId::uniformity: CHECK(*row.normalized.uniformity == 100); break;
      case MeasureId::coverage: CHECK(*row.normalized.coverage == 100); break;
      case MeasureId::directed_coverage: CHECK(*row.normalized.dcoverage == 100); break;
    }
    // Normalization bounds: up-measures at most 100, down-measures at least.
    if (row.normalized.uniformity) CHECK(*row.normalized.uniformity <= 100);
    if (row.normalized.hypervolume) CHECK(*row.normalized.hypervolume <= 100);
    if (row.normalized.avg_sum) CHECK(*row.normalized.avg_sum <= 100);
    if (row.normalized.coverage) CHECK(*row.normalized.coverage >= 100);
    if (row.normalized.dcoverage) CHECK(*row.normalized.dcoverage >= 100);

    // Raw cells match an independent recomputation from the slate.
    const Instance& sub = table.instances.at(row.instance);
    CHECK(row.raw->coverage ==
          Rational(testsupport::oracle_cover(sub, row.slate, testsupport::oracle_manhattan),
                   sub.scale));
    CHECK(row.raw->dcoverage ==
          Rational(testsupport::oracle_cover(sub, row.slate, testsupport::oracle_directed),
                   sub.scale));
    if (row.raw->uniformity) {
      CHECK(*row.raw->uniformity ==
            Rational(testsupport::oracle_uniformity(sub, row.slate), sub.scale));
    }
    // And the slate's own-measure value equals the exact optimum computed
    // by the oracle enumeration, where the enumeration stays tractable.
    if (row.k_abs <= 5) {
      const Dist oracle_best = testsupport::oracle_best_value(sub, row.method, row.k_abs);
      switch (row.method) {
        case MeasureId::uniformity:
          CHECK(*row.raw->uniformity == Rational(oracle_best, sub.scale));
          break;
        case MeasureId::coverage:
          CHECK(row.raw->coverage == Rational(oracle_best, sub.scale));
          break;
        case MeasureId::directed_coverage:
          CHECK(row.raw->dcoverage == Rational(oracle_best, sub.scale));
          break;
      }
    }
  }

  // Raw optima weakly improve as k grows.
  for (MeasureId method :
       {MeasureId::uniformity, MeasureId::coverage, MeasureId::directed_coverage}) {
    std::vector<const ReportRow*> rows;
    for (const ReportRow& row : table.rows) {
      if (row.method == method) rows.push_back(&row);
    }
    REQUIRE(rows.size() == 3);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(rows[i]->k_abs >= rows[i - 1]->k_abs);
      switch (method) {
        case MeasureId::uniformity:
          CHECK(*rows[i]->raw->uniformity <= *rows[i - 1]->raw->uniformity);
          break;
        case MeasureId::coverage:
          CHECK(rows[i]->raw->coverage <= rows[i - 1]->raw->coverage);
          break;
        case MeasureId::directed_coverage:
          CHECK(rows[i]->raw->dcoverage <= rows[i - 1]->raw->dcoverage);
          break;
      }
    }
  }
}

TEST_CASE("experiment reports are byte-identical across runs") {
  Rng rng(54);
  const Instance front = random_pareto_2d(rng, 30, 200, "det");
  const auto path = std::filesystem::temp_directory_path() / "det.csv";
  {
    std::ofstream out(path);
    emit_csv(front, out);
  }
  ExperimentConfig config;
  config.datasets = {path};
  config.k_percents = {10, 20};
  config.seed = 99;

  std::ostringstream first, second;
  write_report_json(run_experiment(config), first);
  write_report_json(run_experiment(config), second);
  CHECK(first.str() == second.str());
  CHECK(first.str().find("\"dataset\"") != std::string::npos);
}

TEST_CASE("bundled fronts are valid and sized as documented") {
  const auto fronts = bundled_fronts();
  REQUIRE(fronts.size() == 3);
  CHECK(fronts[0].second.n() == 230);  // triggers subsampling at cap 200
  CHECK(fronts[0].second.d() == 2);
  CHECK(fronts[1].second.d() == 2);
  CHECK(fronts[2].second.d() == 3);
  CHECK(fronts[2].second.n() == 36);
}

TEST_CASE("incomplete cells are recorded, not faked") {
  const auto fronts = bundled_fronts();
  const auto path = std::filesystem::temp_directory_path() / "p3.csv";
  {
    std::ofstream out(path);
    emit_csv(fronts[2].second, out);
  }
  ExperimentConfig config;
  config.datasets = {path};
  config.k_percents = {25};
  config.limits.node_budget = 5;  // guaranteed to blow
  const ReportTable table = run_experiment(config);
  CHECK_FALSE(table.all_complete);
  for (const ReportRow& row : table.rows) {
    CHECK_FALSE(row.complete);
    CHECK_FALSE(row.raw.has_value());
  }
}

TEST_CASE("slate file parsing") {
  Rng rng(55);
  const Instance inst = random_pareto_2d(rng, 6, 30);
  const auto path = temp_file("slate.txt", "# members\n0, 2\n4\n");
  const Slate slate = read_slate_file(path, inst);
  CHECK(slate.members == std::vector<std::int32_t>{0, 2, 4});

  const auto bad = temp_file("slate_bad.txt", "0 9\n");
  CHECK_THROWS_AS(read_slate_file(bad, inst), InputError);
}
