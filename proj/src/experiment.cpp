#include "pruning/experiment.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <tuple>

#include <json.hpp>

#include "pruning/csv.hpp"
#include "pruning/generate.hpp"
#include "pruning/measures.hpp"

namespace pruning {

namespace {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (const unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string dataset_group(const std::string& stem) {
  const auto sep = stem.find("__");
  return sep == std::string::npos ? stem : stem.substr(0, sep);
}

Rational to_original_units(Dist value, Coord scale) { return Rational(value, scale); }

Rational hypervolume_original_units(const BigInt& value, Coord scale, int d) {
  BigInt denom = 1;
  for (int i = 0; i < d; ++i) denom *= scale;
  return Rational(value, denom);
}

// Exact JSON number: integers up to 2^53 stay integers, everything else is
// rendered as a double (deterministically).
Json number(const Rational& value) {
  if (denominator(value) == 1) {
    const BigInt num = numerator(value);
    if (num <= BigInt(1) << 53 && num >= -(BigInt(1) << 53)) {
      return Json(static_cast<std::int64_t>(num));
    }
  }
  return Json(value.convert_to<double>());
}

Json maybe_number(const std::optional<Rational>& value) {
  return value.has_value() ? number(*value) : Json(nullptr);
}

std::string csv_cell(const std::optional<Rational>& value) {
  if (!value.has_value()) return "";
  return maybe_number(value).dump();
}

std::optional<Rational> raw_get(const RawScores& raw, int which) {
  switch (which) {
    case 0: return raw.uniformity;
    case 1: return raw.coverage;
    case 2: return raw.dcoverage;
    case 3: return raw.hypervolume;
    default: return raw.avg_sum;
  }
}

void norm_set(NormScores& norm, int which, std::optional<Rational> value) {
  switch (which) {
    case 0: norm.uniformity = std::move(value); break;
    case 1: norm.coverage = std::move(value); break;
    case 2: norm.dcoverage = std::move(value); break;
    case 3: norm.hypervolume = std::move(value); break;
    default: norm.avg_sum = std::move(value); break;
  }
}

std::optional<Rational> norm_get(const NormScores& norm, int which) {
  switch (which) {
    case 0: return norm.uniformity;
    case 1: return norm.coverage;
    case 2: return norm.dcoverage;
    case 3: return norm.hypervolume;
    default: return norm.avg_sum;
  }
}

constexpr const char* kMeasureKeys[5] = {"uniformity", "coverage", "dcoverage", "hypervolume",
                                         "avg_sum"};
constexpr bool kHigherBetter[5] = {true, false, false, true, true};

}  // namespace

int k_from_percent(int pct, int n) {
  if (pct < 1 || pct > 100) throw InputError("k percentage must be in 1..100");
  const std::int64_t k = (static_cast<std::int64_t>(pct) * n * 2 + 100) / 200;  // half-up
  return std::max<std::int64_t>(1, k);
}

Instance subsample(const Instance& instance, int cap, std::uint64_t seed) {
  if (cap < 2) throw InputError("subsample cap must be at least 2");
  if (instance.n() <= cap) return instance;

  Rng rng(seed);
  std::vector<int> indices(instance.n());
  std::iota(indices.begin(), indices.end(), 0);
  for (int i = 0; i < cap; ++i) {
    const int j = i + static_cast<int>(rng.below(indices.size() - i));
    std::swap(indices[i], indices[j]);
  }
  indices.resize(cap);
  std::sort(indices.begin(), indices.end());

  std::vector<Alternative> points;
  points.reserve(cap);
  for (int i : indices) points.push_back(instance.alt(i));
  Instance sub = make_instance(instance.name, std::move(points), instance.kinds, instance.scale,
                               ValidationMode::strict);
  return sub;
}

namespace {

RawScores score_slate(const Instance& instance, const Slate& slate) {
  RawScores scores;
  if (slate.k() >= 2) {
    scores.uniformity = to_original_units(uniformity(instance, slate), instance.scale);
  }
  scores.coverage = to_original_units(coverage(instance, slate), instance.scale);
  scores.dcoverage = to_original_units(directed_coverage(instance, slate), instance.scale);
  scores.hypervolume = hypervolume_original_units(
      hypervolume(instance, slate, default_reference_point(instance)), instance.scale,
      instance.d());
  scores.avg_sum = Rational(avg_sum_objective(instance, slate)) / instance.scale;
  return scores;
}

void normalize_cells(std::vector<ReportRow*>& rows) {
  for (int which = 0; which < 5; ++which) {
    std::optional<Rational> best;
    for (const ReportRow* row : rows) {
      if (!row->raw.has_value()) continue;
      const std::optional<Rational> value = raw_get(*row->raw, which);
      if (!value.has_value()) continue;
      if (!best.has_value() || (kHigherBetter[which] ? *value > *best : *value < *best)) {
        best = value;
      }
    }
    if (!best.has_value()) continue;
    for (ReportRow* row : rows) {
      if (!row->raw.has_value()) continue;
      const std::optional<Rational> value = raw_get(*row->raw, which);
      if (!value.has_value()) continue;
      if (*best == 0) {
        if (*value == 0) norm_set(row->normalized, which, Rational(100));
        continue;
      }
      if (*best < 0) continue;  // normalization presumes positive scores
      norm_set(row->normalized, which, *value / *best * 100);
    }
  }
}

}  // namespace

ReportTable run_experiment(const ExperimentConfig& config) {
  if (config.datasets.empty()) throw InputError("no datasets configured");
  for (int pct : config.k_percents) {
    if (pct < 1 || pct > 100) throw InputError("k percentage must be in 1..100");
  }

  ReportTable table;
  for (const std::filesystem::path& path : config.datasets) {
    IngestResult ingested = ingest_csv(path, config.mode);
    const std::string instance_name = ingested.instance.name;
    Instance sub = subsample(ingested.instance, config.subsample_cap,
                             config.seed ^ fnv1a(instance_name));
    table.instances.emplace(instance_name, sub);

    for (int pct : config.k_percents) {
      const int k = k_from_percent(pct, sub.n());
      std::vector<std::size_t> cell_rows;
      for (MeasureId method : config.methods) {
        if (method == MeasureId::uniformity && k < 2) continue;  // cell absent
        ReportRow row;
        row.dataset = dataset_group(instance_name);
        row.instance = instance_name;
        row.method = method;
        row.k_pct = pct;
        row.k_abs = k;
        try {
          SolveRequest request{sub, method, k, SolverId::automatic, false, config.limits};
          SolveResult solved = solve(request);
          row.slate = std::move(solved.slate);
          row.raw = score_slate(sub, row.slate);
          row.complete = true;
        } catch (const BudgetError&) {
          row.complete = false;
          table.all_complete = false;
        }
        cell_rows.push_back(table.rows.size());
        table.rows.push_back(std::move(row));
      }
      std::vector<ReportRow*> group;
      group.reserve(cell_rows.size());
      for (std::size_t index : cell_rows) group.push_back(&table.rows[index]);
      normalize_cells(group);
    }
  }

  // Aggregate: mean of normalized cells over each dataset group.
  std::map<std::tuple<std::string, int, int>, AggregateRow> aggregates;
  for (const ReportRow& row : table.rows) {
    auto& agg = aggregates[{row.dataset, static_cast<int>(row.method), row.k_pct}];
    agg.dataset = row.dataset;
    agg.method = row.method;
    agg.k_pct = row.k_pct;
    ++agg.instances;
  }
  for (auto& [key, agg] : aggregates) {
    for (int which = 0; which < 5; ++which) {
      Rational sum = 0;
      int count = 0;
      for (const ReportRow& row : table.rows) {
        if (row.dataset != agg.dataset || row.method != agg.method || row.k_pct != agg.k_pct) {
          continue;
        }
        const std::optional<Rational> value = norm_get(row.normalized, which);
        if (value.has_value()) {
          sum += *value;
          ++count;
        }
      }
      if (count > 0) norm_set(agg.normalized_means, which, sum / count);
    }
    table.aggregates.push_back(agg);
  }
  return table;
}

namespace {

Json scores_json(const RawScores& raw) {
  Json out = Json::object();
  out["uniformity"] = maybe_number(raw.uniformity);
  out["coverage"] = number(raw.coverage);
  out["dcoverage"] = number(raw.dcoverage);
  out["hypervolume"] = number(raw.hypervolume);
  out["avg_sum"] = number(raw.avg_sum);
  if (out["uniformity"].is_null()) out.erase("uniformity");
  return out;
}

Json norm_json(const NormScores& norm) {
  Json out = Json::object();
  for (int which = 0; which < 5; ++which) {
    const std::optional<Rational> value = norm_get(norm, which);
    if (value.has_value()) out[kMeasureKeys[which]] = number(*value);
  }
  return out;
}

}  // namespace

void write_report_json(const ReportTable& table, std::ostream& out) {
  Json rows = Json::array();
  for (const ReportRow& row : table.rows) {
    Json entry = Json::object();
    entry["dataset"] = row.dataset;
    entry["instance"] = row.instance;
    entry["method"] = to_string(row.method);
    entry["k_pct"] = row.k_pct;
    entry["k_abs"] = row.k_abs;
    entry["complete"] = row.complete;
    if (row.raw.has_value()) {
      entry["raw"] = scores_json(*row.raw);
      entry["normalized"] = norm_json(row.normalized);
      Json members = Json::array();
      for (std::int32_t m : row.slate.members) members.push_back(m);
      entry["slate"] = std::move(members);
    }
    rows.push_back(std::move(entry));
  }
  out << rows.dump(2) << "\n";
}

void write_report_csv(const ReportTable& table, std::ostream& out) {
  out << "dataset,instance,method,k_pct,k_abs,complete";
  for (const char* key : kMeasureKeys) out << ",raw_" << key;
  for (const char* key : kMeasureKeys) out << ",norm_" << key;
  out << "\n";
  for (const ReportRow& row : table.rows) {
    out << row.dataset << "," << row.instance << "," << to_string(row.method) << "," << row.k_pct
        << "," << row.k_abs << "," << (row.complete ? 1 : 0);
    for (int which = 0; which < 5; ++which) {
      out << ",";
      if (row.raw.has_value()) out << csv_cell(raw_get(*row.raw, which));
    }
    for (int which = 0; which < 5; ++which) out << "," << csv_cell(norm_get(row.normalized, which));
    out << "\n";
  }
}

void write_aggregates_json(const ReportTable& table, std::ostream& out) {
  Json rows = Json::array();
  for (const AggregateRow& agg : table.aggregates) {
    Json entry = Json::object();
    entry["dataset"] = agg.dataset;
    entry["method"] = to_string(agg.method);
    entry["k_pct"] = agg.k_pct;
    entry["instances"] = agg.instances;
    entry["normalized_means"] = norm_json(agg.normalized_means);
    rows.push_back(std::move(entry));
  }
  out << rows.dump(2) << "\n";
}

void write_aggregates_csv(const ReportTable& table, std::ostream& out) {
  out << "dataset,method,k_pct,instances";
  for (const char* key : kMeasureKeys) out << ",mean_norm_" << key;
  out << "\n";
  for (const AggregateRow& agg : table.aggregates) {
    out << agg.dataset << "," << to_string(agg.method) << "," << agg.k_pct << ","
        << agg.instances;
    for (int which = 0; which < 5; ++which) {
      out << "," << csv_cell(norm_get(agg.normalized_means, which));
    }
    out << "\n";
  }
}

void write_plot_csv(const ReportTable& table, const std::string& instance_name, int k_pct,
                    std::ostream& out) {
  const auto found = table.instances.find(instance_name);
  if (found == table.instances.end()) throw InputError("unknown instance " + instance_name);
  const Instance& instance = found->second;

  std::vector<const ReportRow*> rows;
  for (const ReportRow& row : table.rows) {
    if (row.instance == instance_name && row.k_pct == k_pct && row.raw.has_value()) {
      validate_slate(instance, row.slate);
      rows.push_back(&row);
    }
  }

  for (int j = 0; j < instance.d(); ++j) out << (j == 0 ? "o" : ",o") << j + 1;
  for (const ReportRow* row : rows) out << ",sel_" << to_string(row->method);
  out << "\n";
  for (int i = 0; i < instance.n(); ++i) {
    for (int j = 0; j < instance.d(); ++j) {
      if (j > 0) out << ",";
      out << decimal_string(instance.alt(i).coords[j], instance.scale);
    }
    for (const ReportRow* row : rows) {
      out << "," << (row->slate.contains(i) ? 1 : 0);
    }
    out << "\n";
  }
}

void write_report_files(const ReportTable& table, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir / "plots");
  {
    std::ofstream out(out_dir / "report.json");
    write_report_json(table, out);
  }
  {
    std::ofstream out(out_dir / "report.csv");
    write_report_csv(table, out);
  }
  {
    std::ofstream out(out_dir / "aggregates.json");
    write_aggregates_json(table, out);
  }
  {
    std::ofstream out(out_dir / "aggregates.csv");
    write_aggregates_csv(table, out);
  }
  std::set<std::pair<std::string, int>> cells;
  for (const ReportRow& row : table.rows) cells.emplace(row.instance, row.k_pct);
  for (const auto& [instance_name, k_pct] : cells) {
    std::ofstream out(out_dir / "plots" /
                      (instance_name + "__k" + std::to_string(k_pct) + ".csv"));
    write_plot_csv(table, instance_name, k_pct, out);
  }
}

std::vector<std::pair<std::string, Instance>> bundled_fronts() {
  std::vector<std::pair<std::string, Instance>> fronts;

  // Disconnected two-objective front: five separated segments, globally a
  // strictly decreasing staircase; large enough to trigger subsampling.
  {
    std::vector<Alternative> points;
    for (Coord segment = 0; segment < 5; ++segment) {
      for (Coord t = 0; t < 46; ++t) {
        const Coord x = segment * 260 + t * 4;
        const Coord y = 4000 - 2 * x - 300 * segment;
        points.push_back(Alternative{{x, y}});
      }
    }
    fronts.emplace_back("zdt3like__disconnected",
                        make_instance("zdt3like__disconnected", std::move(points),
                                      ValidationMode::strict));
  }

  // Concave two-objective front.
  {
    std::vector<Alternative> points;
    for (Coord j = 0; j < 96; ++j) {
      points.push_back(Alternative{{50 * j, 9216 - j * j}});
    }
    fronts.emplace_back("concave__front", make_instance("concave__front", std::move(points),
                                                        ValidationMode::strict));
  }

  // Three-objective constant-sum simplex grid (an antichain by
  // construction).
  {
    std::vector<Alternative> points;
    for (Coord i = 0; i <= 7; ++i) {
      for (Coord j = 0; i + j <= 7; ++j) {
        points.push_back(Alternative{{3 + 5 * i, 3 + 5 * j, 3 + 5 * (7 - i - j)}});
      }
    }
    fronts.emplace_back("plane3__simplex", make_instance("plane3__simplex", std::move(points),
                                                         ValidationMode::strict));
  }
  return fronts;
}

}  // namespace pruning
