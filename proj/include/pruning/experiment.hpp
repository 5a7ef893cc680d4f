/**
 * @file experiment.hpp
 * @brief Batch evaluation harness: ingest fronts, subsample, solve each
 *        method at each k budget, score with five measures, and emit
 *        per-instance and aggregated normalized reports.
 */

#ifndef PRUNING_EXPERIMENT_HPP
#define PRUNING_EXPERIMENT_HPP

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "pruning/solve.hpp"
#include "pruning/types.hpp"

namespace pruning {

struct ExperimentConfig {
  std::vector<std::filesystem::path> datasets;
  std::vector<int> k_percents{5, 10, 25};  ///< integer percentages in (0, 100]
  std::vector<MeasureId> methods{MeasureId::uniformity, MeasureId::coverage,
                                 MeasureId::directed_coverage};
  int subsample_cap = 200;
  std::uint64_t seed = 0;
  ValidationMode mode = ValidationMode::strict;
  Limits limits;
};

/// The five evaluation measures in original units. Uniformity is absent
/// when k < 2 (undefined). All values are exact rationals.
struct RawScores {
  std::optional<Rational> uniformity;
  Rational coverage{0};
  Rational dcoverage{0};
  Rational hypervolume{0};
  Rational avg_sum{0};
};

/// Normalized percentages (value / best over methods * 100). A cell is
/// absent when the raw value is absent or the best value is not positive
/// (except that 0/0 normalizes to 100).
struct NormScores {
  std::optional<Rational> uniformity;
  std::optional<Rational> coverage;
  std::optional<Rational> dcoverage;
  std::optional<Rational> hypervolume;
  std::optional<Rational> avg_sum;
};

struct ReportRow {
  std::string dataset;   ///< group: file stem up to the first "__"
  std::string instance;  ///< file stem
  MeasureId method;
  int k_pct = 0;
  int k_abs = 0;
  bool complete = false;  ///< solver finished within budget
  std::optional<RawScores> raw;
  NormScores normalized;
  Slate slate;
};

struct AggregateRow {
  std::string dataset;
  MeasureId method;
  int k_pct = 0;
  int instances = 0;  ///< rows contributing to the means
  NormScores normalized_means;
};

struct ReportTable {
  std::vector<ReportRow> rows;
  std::vector<AggregateRow> aggregates;
  bool all_complete = true;
  /// Subsampled instances by instance name, for plot emission.
  std::map<std::string, Instance> instances;
};

/// k from a percentage budget: round-half-up of pct*n/100 in exact integer
/// arithmetic, with a floor of 1.
int k_from_percent(int pct, int n);

/// Identity when n <= cap; otherwise a uniform sample of cap alternatives
/// without replacement, deterministic in the seed, preserving canonical
/// order.
Instance subsample(const Instance& instance, int cap, std::uint64_t seed);

ReportTable run_experiment(const ExperimentConfig& config);

/// report.json: array of row objects
/// {dataset, instance, method, k_pct, k_abs, raw:{...}, normalized:{...}}.
void write_report_json(const ReportTable& table, std::ostream& out);
void write_report_csv(const ReportTable& table, std::ostream& out);
void write_aggregates_json(const ReportTable& table, std::ostream& out);
void write_aggregates_csv(const ReportTable& table, std::ostream& out);

/// Per-(instance, k) plot data: alternative coordinates plus one selected
/// flag column per method. Slate indices are re-validated against the
/// instance before writing.
void write_plot_csv(const ReportTable& table, const std::string& instance_name, int k_pct,
                    std::ostream& out);

/// Writes report.json/report.csv/aggregates.json/aggregates.csv and
/// plots/<instance>__k<pct>.csv under out_dir.
void write_report_files(const ReportTable& table, const std::filesystem::path& out_dir);

/// Analytically generated fronts bundled for benchmarking without external
/// data: a disconnected two-objective front large enough to trigger
/// subsampling, a concave two-objective front, and a three-objective
/// constant-sum simplex front.
std::vector<std::pair<std::string, Instance>> bundled_fronts();

}  // namespace pruning

#endif  // PRUNING_EXPERIMENT_HPP
