// Command-line interface for the Pareto pruning library: exact solving,
// slate evaluation, axiom checking, hardness embeddings, and the benchmark
// harness.
//
// Exit codes: 0 success, 2 input or contract error, 3 budget exhausted,
// 4 fixture mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pruning/axioms.hpp"
#include "pruning/csv.hpp"
#include "pruning/embeddings.hpp"
#include "pruning/experiment.hpp"
#include "pruning/fixtures.hpp"
#include "pruning/generate.hpp"
#include "pruning/measures.hpp"
#include "pruning/solve.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace pruning;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitFixtureMismatch = 4;

enum class Format { text, json, csv };

struct GlobalOptions {
  std::uint64_t seed = 0;
  bool lenient = false;
  Format format = Format::text;
};

Format format_from_string(const std::string& token) {
  if (token == "text") return Format::text;
  if (token == "json") return Format::json;
  if (token == "csv") return Format::csv;
  throw InputError("unknown format: " + token);
}

ValidationMode mode_of(const GlobalOptions& global) {
  return global.lenient ? ValidationMode::lenient : ValidationMode::strict;
}

/// `fixture:<id>` loads a compiled instance, anything else is a CSV path.
Instance load_instance(const std::string& input, ValidationMode mode) {
  constexpr std::string_view prefix = "fixture:";
  if (input.rfind(prefix, 0) == 0) {
    const std::string id = input.substr(prefix.size());
    std::optional<Instance> instance = fixture_instance(id);
    if (!instance.has_value()) throw InputError("unknown fixture instance: " + id);
    return std::move(*instance);
  }
  IngestResult result = ingest_csv(input, mode);
  for (const std::string& warning : result.report.warnings) {
    std::cerr << "warning: " << input << ": " << warning << "\n";
  }
  return std::move(result.instance);
}

std::string value_string(Dist value, Coord scale) { return decimal_string(value, scale); }

Json rational_json(const Rational& value) {
  if (denominator(value) == 1) {
    const BigInt num = numerator(value);
    if (num <= BigInt(1) << 53 && num >= -(BigInt(1) << 53)) {
      return Json(static_cast<std::int64_t>(num));
    }
  }
  return Json(value.convert_to<double>());
}

std::string rational_string(const Rational& value) { return rational_json(value).dump(); }

// Parses "--k 10" or "--k 25%".
struct KSpec {
  int value = 0;
  bool percent = false;
};

KSpec parse_k(const std::string& token) {
  KSpec spec;
  std::string digits = token;
  if (!digits.empty() && digits.back() == '%') {
    spec.percent = true;
    digits.pop_back();
  }
  try {
    std::size_t used = 0;
    spec.value = std::stoi(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(digits);
  } catch (const std::exception&) {
    throw InputError("cannot parse k specification: " + token);
  }
  return spec;
}

Json slate_json(const Slate& slate) {
  Json members = Json::array();
  for (std::int32_t m : slate.members) members.push_back(m);
  return members;
}

Json coords_json(const Instance& instance, const Slate& slate) {
  Json rows = Json::array();
  for (std::int32_t m : slate.members) {
    Json row = Json::array();
    for (int j = 0; j < instance.d(); ++j) {
      row.push_back(decimal_string(instance.alt(m).coords[j], instance.scale));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_prune(const GlobalOptions& global, const std::string& input, const std::string& measure,
              const std::string& k_spec, const std::string& solver, bool all_optimal,
              std::uint64_t node_budget, std::uint64_t brute_cap) {
  SolveRequest request;
  request.instance = load_instance(input, mode_of(global));
  request.measure = measure_from_string(measure);
  const KSpec k = parse_k(k_spec);
  request.k = k.percent ? k_from_percent(k.value, request.instance.n()) : k.value;
  if (request.measure == MeasureId::uniformity && k.percent) request.k = std::max(request.k, 2);
  request.solver = solver_from_string(solver);
  request.enumerate_all_optimal = all_optimal;
  request.limits.node_budget = node_budget;
  request.limits.brute_cap = brute_cap;

  const SolveResult result = solve(request);
  const Instance& instance = request.instance;

  if (global.format == Format::json) {
    Json out;
    out["instance"] = instance.name;
    out["n"] = instance.n();
    out["d"] = instance.d();
    out["measure"] = to_string(request.measure);
    out["k"] = request.k;
    out["solver"] = result.solver_id;
    out["optimal_value"] = value_string(result.optimal_value, instance.scale);
    out["slate"] = slate_json(result.slate);
    out["slate_coords"] = coords_json(instance, result.slate);
    if (result.all_optimal.has_value()) {
      Json all = Json::array();
      for (const Slate& slate : *result.all_optimal) all.push_back(slate_json(slate));
      out["all_optimal"] = std::move(all);
    }
    out["stats"] = {{"nodes", result.stats.nodes},
                    {"feasibility_checks", result.stats.feasibility_checks},
                    {"ladder_size", result.stats.ladder_size}};
    std::cout << out.dump(2) << "\n";
  } else if (global.format == Format::csv) {
    std::cout << "measure,k,solver,optimal_value,slate\n";
    std::cout << to_string(request.measure) << "," << request.k << "," << result.solver_id << ","
              << value_string(result.optimal_value, instance.scale) << ",";
    for (std::size_t i = 0; i < result.slate.members.size(); ++i) {
      std::cout << (i ? " " : "") << result.slate.members[i];
    }
    std::cout << "\n";
  } else {
    std::cout << "instance: " << instance.name << " (n=" << instance.n() << ", d=" << instance.d()
              << ")\n";
    std::cout << "measure: " << to_string(request.measure) << ", k=" << request.k
              << ", solver=" << result.solver_id << "\n";
    std::cout << "optimal value: " << value_string(result.optimal_value, instance.scale) << "\n";
    std::cout << "slate:";
    for (std::int32_t m : result.slate.members) std::cout << " " << m;
    std::cout << "\n";
    for (std::int32_t m : result.slate.members) {
      std::cout << "  [" << m << "]";
      for (int j = 0; j < instance.d(); ++j) {
        std::cout << " " << decimal_string(instance.alt(m).coords[j], instance.scale);
      }
      std::cout << "\n";
    }
    if (result.all_optimal.has_value()) {
      std::cout << "all optimal slates (" << result.all_optimal->size() << "):\n";
      for (const Slate& slate : *result.all_optimal) {
        std::cout << " ";
        for (std::int32_t m : slate.members) std::cout << " " << m;
        std::cout << "\n";
      }
    }
  }
  for (const std::string& note : result.stats.notes) std::cerr << "note: " << note << "\n";
  return kExitOk;
}

int cmd_evaluate(const GlobalOptions& global, const std::string& input,
                 const std::string& slate_file, const std::vector<std::string>& measures,
                 const std::string& ref_spec) {
  const Instance instance = load_instance(input, mode_of(global));
  const Slate slate = read_slate_file(slate_file, instance);

  std::vector<std::string> wanted = measures;
  if (wanted.empty()) {
    wanted = {"coverage", "dcoverage", "hypervolume", "avg_sum"};
    if (slate.k() >= 2) wanted.insert(wanted.begin(), "uniformity");
  }

  std::optional<Alternative> ref;
  if (!ref_spec.empty()) {
    Alternative parsed;
    std::stringstream stream(ref_spec);
    std::string field;
    while (std::getline(stream, field, ',')) {
      try {
        parsed.coords.push_back(static_cast<Coord>(std::stoll(field)));
      } catch (const std::exception&) {
        throw InputError("cannot parse reference coordinate: " + field);
      }
    }
    ref = std::move(parsed);
  }

  std::vector<std::pair<std::string, std::string>> scores;
  for (const std::string& name : wanted) {
    if (name == "uniformity" || name == "u") {
      scores.emplace_back("uniformity", value_string(uniformity(instance, slate), instance.scale));
    } else if (name == "coverage" || name == "c") {
      scores.emplace_back("coverage", value_string(coverage(instance, slate), instance.scale));
    } else if (name == "dcoverage" || name == "dc") {
      scores.emplace_back("dcoverage",
                          value_string(directed_coverage(instance, slate), instance.scale));
    } else if (name == "hypervolume" || name == "hv") {
      const Alternative reference = ref.has_value() ? *ref : default_reference_point(instance);
      BigInt denom = 1;
      for (int i = 0; i < instance.d(); ++i) denom *= instance.scale;
      scores.emplace_back("hypervolume",
                          rational_string(Rational(hypervolume(instance, slate, reference), denom)));
    } else if (name == "avg_sum" || name == "avgsum") {
      scores.emplace_back("avg_sum",
                          rational_string(avg_sum_objective(instance, slate) / instance.scale));
    } else {
      throw InputError("unknown measure: " + name);
    }
  }

  if (global.format == Format::json) {
    Json out;
    out["instance"] = instance.name;
    out["slate"] = slate_json(slate);
    for (const auto& [key, value] : scores) out[key] = value;
    std::cout << out.dump(2) << "\n";
  } else if (global.format == Format::csv) {
    for (std::size_t i = 0; i < scores.size(); ++i) std::cout << (i ? "," : "") << scores[i].first;
    std::cout << "\n";
    for (std::size_t i = 0; i < scores.size(); ++i) std::cout << (i ? "," : "") << scores[i].second;
    std::cout << "\n";
  } else {
    for (const auto& [key, value] : scores) std::cout << key << ": " << value << "\n";
  }
  return kExitOk;
}

int cmd_axioms(const GlobalOptions& global, const std::string& fixture_id, bool random,
               const std::string& axiom_name, const std::string& measure_name, int trials,
               bool list) {
  if (list) {
    std::cout << "fixtures:\n";
    for (const Fixture& fixture : fixture_catalog()) {
      std::cout << "  " << fixture.id << " (expected "
                << (fixture.expected_holds ? "holds" : "violated") << ")\n";
    }
    std::cout << "instances:\n";
    for (const std::string& id : fixture_instance_ids()) std::cout << "  fixture:" << id << "\n";
    return kExitOk;
  }

  if (random) {
    if (axiom_name.empty() || measure_name.empty()) {
      throw InputError("--random requires --axiom and --measure");
    }
    const TrialStats stats = run_random_axiom_trials(
        axiom_from_string(axiom_name), measure_from_string(measure_name), trials, global.seed);
    if (global.format == Format::json) {
      Json out;
      out["axiom"] = axiom_name;
      out["measure"] = measure_name;
      out["trials"] = trials;
      out["seed"] = global.seed;
      out["holds"] = stats.holds;
      out["violated"] = stats.violated;
      out["not_applicable"] = stats.not_applicable;
      if (!stats.first_violation.empty()) out["first_violation"] = stats.first_violation;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "axiom " << axiom_name << " / " << measure_name << ": " << stats.holds
                << " holds, " << stats.violated << " violated, " << stats.not_applicable
                << " not applicable (" << trials << " trials, seed " << global.seed << ")\n";
      if (!stats.first_violation.empty()) {
        std::cout << "first violation: " << stats.first_violation << "\n";
      }
    }
    return kExitOk;
  }

  std::vector<const Fixture*> selected;
  if (fixture_id == "all") {
    for (const Fixture& fixture : fixture_catalog()) selected.push_back(&fixture);
  } else {
    const Fixture* fixture = find_fixture(fixture_id);
    if (fixture == nullptr) throw InputError("unknown fixture: " + fixture_id);
    selected.push_back(fixture);
  }

  bool all_match = true;
  Json rows = Json::array();
  for (const Fixture* fixture : selected) {
    const FixtureOutcome outcome = run_fixture(*fixture);
    const bool match = outcome.verdict_matches && outcome.values_match;
    all_match = all_match && match;
    if (global.format == Format::json) {
      Json row;
      row["id"] = outcome.id;
      row["expected"] = fixture->expected_holds ? "holds" : "violated";
      row["verdict"] = to_string(outcome.verdict);
      row["verdict_matches"] = outcome.verdict_matches;
      row["values_match"] = outcome.values_match;
      if (outcome.base_value.has_value()) row["base_value"] = rational_json(*outcome.base_value);
      if (outcome.modified_value.has_value()) {
        row["modified_value"] = rational_json(*outcome.modified_value);
      }
      rows.push_back(std::move(row));
    } else {
      std::cout << (match ? "ok   " : "FAIL ") << outcome.id << ": expected "
                << (fixture->expected_holds ? "holds" : "violated") << ", got "
                << to_string(outcome.verdict);
      if (outcome.base_value.has_value()) {
        std::cout << " (value " << rational_string(*outcome.base_value);
        if (outcome.modified_value.has_value()) {
          std::cout << " -> " << rational_string(*outcome.modified_value);
        }
        std::cout << ")";
      }
      if (!outcome.values_match) std::cout << " [value mismatch]";
      std::cout << "\n";
    }
  }
  if (global.format == Format::json) std::cout << rows.dump(2) << "\n";
  if (!all_match) {
    std::cerr << "fixture matrix mismatch\n";
    return kExitFixtureMismatch;
  }
  return kExitOk;
}

int cmd_embed(const GlobalOptions& global, const std::string& input, const std::string& transform,
              const std::string& eps_spec, std::int64_t delta, std::int64_t grid_n,
              const std::string& out_path) {
  const PointSet raw = ingest_points_csv(input);

  std::ostringstream buffer;
  Json meta;
  if (transform == "trigrid") {
    if (raw.scale != 1) throw InputError("trigrid expects integer grid coordinates");
    std::vector<GridPoint> vertices;
    for (const Alternative& a : raw.points) {
      if (a.dimension() != 2) throw InputError("trigrid expects 2-D inputs");
      vertices.push_back(GridPoint{a.coords[0], a.coords[1]});
    }
    const Instance instance = trigrid_instance(vertices, "trigrid");
    emit_csv(instance, buffer);
  } else if (transform == "hyperplane") {
    Rational eps(1, 8);
    if (!eps_spec.empty()) {
      const auto slash = eps_spec.find('/');
      try {
        eps = slash == std::string::npos
                  ? Rational(std::stoll(eps_spec))
                  : Rational(std::stoll(eps_spec.substr(0, slash)),
                             std::stoll(eps_spec.substr(slash + 1)));
      } catch (const std::exception&) {
        throw InputError("cannot parse epsilon: " + eps_spec);
      }
    }
    const Instance instance = hyperplane_embed(raw, eps, "hyperplane");
    emit_csv(instance, buffer);
    meta["epsilon"] = rational_string(eps);
  } else if (transform == "lift") {
    const Instance instance = antisymmetric_lift(raw, "lift");
    emit_csv(instance, buffer);
  } else if (transform == "shear") {
    std::int64_t n = grid_n;
    if (n == 0) {
      for (const Alternative& a : raw.points) {
        for (Coord c : a.coords) n = std::max<std::int64_t>(n, c);
      }
    }
    const ShearResult sheared = shear_map(raw, n, delta);
    emit_points_csv(PointSet{sheared.points, 1}, buffer);
    meta["t"] = sheared.t;
    meta["delta_prime"] = sheared.delta_prime;
    meta["n"] = n;
    meta["delta"] = delta;
  } else {
    throw InputError("unknown transform: " + transform);
  }

  if (global.format == Format::json) {
    Json out;
    out["transform"] = transform;
    for (auto& [key, value] : meta.items()) out[key] = value;
    out["csv"] = buffer.str();
    if (!out_path.empty()) {
      std::ofstream file(out_path);
      file << buffer.str();
      out["written_to"] = out_path;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (auto& [key, value] : meta.items()) std::cerr << key << ": " << value.dump() << "\n";
    if (!out_path.empty()) {
      std::ofstream file(out_path);
      file << buffer.str();
    } else {
      std::cout << buffer.str();
    }
  }
  return kExitOk;
}

int cmd_bench(const GlobalOptions& global, std::vector<std::string> data, bool bundled,
              const std::string& k_spec, int cap, const std::string& out_dir,
              std::uint64_t node_budget) {
  namespace fs = std::filesystem;
  if (out_dir.empty()) throw InputError("--out directory is required");
  fs::create_directories(out_dir);

  if (bundled) {
    const fs::path data_dir = fs::path(out_dir) / "data";
    fs::create_directories(data_dir);
    for (const auto& [name, instance] : bundled_fronts()) {
      const fs::path path = data_dir / (name + ".csv");
      std::ofstream file(path);
      emit_csv(instance, file);
      data.push_back(path.string());
    }
  }
  if (data.empty()) throw InputError("no datasets: pass --data files or --bundled");

  ExperimentConfig config;
  for (const std::string& path : data) config.datasets.emplace_back(path);
  config.subsample_cap = cap;
  config.seed = global.seed;
  config.mode = mode_of(global);
  config.limits.node_budget = node_budget;
  if (!k_spec.empty()) {
    config.k_percents.clear();
    std::stringstream stream(k_spec);
    std::string field;
    while (std::getline(stream, field, ',')) {
      try {
        config.k_percents.push_back(std::stoi(field));
      } catch (const std::exception&) {
        throw InputError("cannot parse k percentage: " + field);
      }
    }
  }

  const ReportTable table = run_experiment(config);
  write_report_files(table, out_dir);

  if (global.format == Format::json) {
    std::ostringstream aggregates;
    write_aggregates_json(table, aggregates);
    std::cout << aggregates.str();
  } else if (global.format == Format::csv) {
    write_aggregates_csv(table, std::cout);
  } else {
    std::cout << "report written to " << out_dir << " (" << table.rows.size() << " cells)\n";
    std::ostringstream aggregates;
    write_aggregates_csv(table, aggregates);
    std::cout << aggregates.str();
  }
  if (!table.all_complete) {
    std::cerr << "some cells did not complete within the budget\n";
    return kExitBudget;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Pareto front pruning: solvers, measures, axiom checkers, embeddings"};
  app.require_subcommand(1);

  GlobalOptions global;
  std::string format = "text";
  app.add_option("--seed", global.seed, "Seed for all randomized operations");
  app.add_flag("--lenient", global.lenient, "Filter dominated input rows instead of rejecting");
  app.add_option("--format", format, "Output format: text, json, or csv");

  // prune
  auto* prune = app.add_subcommand("prune", "Select an optimal size-k slate");
  std::string prune_input, prune_measure, prune_k, prune_solver = "auto";
  bool prune_all = false;
  std::uint64_t node_budget = Limits{}.node_budget;
  std::uint64_t brute_cap = Limits{}.brute_cap;
  prune->add_option("input", prune_input, "Instance CSV path or fixture:<id>")->required();
  prune->add_option("--measure", prune_measure, "uniformity, coverage, or dcoverage")->required();
  prune->add_option("--k", prune_k, "Slate size, absolute or trailing % of n")->required();
  prune->add_option("--solver", prune_solver, "auto, dp2d, approval, exact, or brute");
  prune->add_flag("--all-optimal", prune_all, "Enumerate every optimal slate");
  prune->add_option("--node-budget", node_budget, "Branch node budget");
  prune->add_option("--brute-cap", brute_cap, "Enumeration cap for the brute solver");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Score a given slate");
  std::string eval_input, eval_slate, eval_ref;
  std::vector<std::string> eval_measures;
  evaluate->add_option("input", eval_input, "Instance CSV path or fixture:<id>")->required();
  evaluate->add_option("--slate", eval_slate, "File of 0-based member indices")->required();
  evaluate->add_option("--measures", eval_measures,
                       "Measures to report (default: all applicable)")
      ->delimiter(',');
  evaluate->add_option("--ref", eval_ref,
                       "Hypervolume reference point, scaled units, comma-separated");

  // axioms
  auto* axioms = app.add_subcommand("axioms", "Run axiom fixtures or randomized checks");
  std::string fixture_id, axiom_name, axiom_measure;
  bool axioms_random = false, axioms_list = false;
  int trials = 100;
  axioms->add_option("--fixture", fixture_id, "Fixture id or 'all'");
  axioms->add_flag("--random", axioms_random, "Randomized trials instead of fixtures");
  axioms->add_option("--axiom", axiom_name,
                     "monotonicity, eps-split, extremism, standout, or outlier");
  axioms->add_option("--measure", axiom_measure, "Measure for randomized trials");
  axioms->add_option("--trials", trials, "Number of randomized trials");
  axioms->add_flag("--list", axioms_list, "List fixture and instance ids");

  // embed
  auto* embed = app.add_subcommand("embed", "Apply a hardness embedding to a point file");
  std::string embed_input, embed_transform, embed_eps, embed_out;
  std::int64_t embed_delta = 1, embed_n = 0;
  embed->add_option("input", embed_input, "2-D point CSV")->required();
  embed->add_option("--transform", embed_transform, "trigrid, hyperplane, lift, or shear")
      ->required();
  embed->add_option("--epsilon", embed_eps, "Hyperplane epsilon as p/q (default 1/8)");
  embed->add_option("--delta", embed_delta, "Shear distance threshold");
  embed->add_option("--grid-n", embed_n, "Shear grid bound (default: max input coordinate)");
  embed->add_option("--out", embed_out, "Write the transformed CSV here instead of stdout");

  // bench
  auto* bench = app.add_subcommand("bench", "Run the normalized comparison protocol");
  std::vector<std::string> bench_data;
  bool bench_bundled = false;
  std::string bench_k, bench_out;
  int bench_cap = 200;
  bench->add_option("--data", bench_data, "Instance CSV files")->delimiter(',');
  bench->add_flag("--bundled", bench_bundled, "Also run the bundled synthetic fronts");
  bench->add_option("--k-percents", bench_k, "Comma-separated k percentages (default 5,10,25)");
  bench->add_option("--cap", bench_cap, "Subsample cap (default 200)");
  bench->add_option("--out", bench_out, "Output directory")->required();
  bench->add_option("--node-budget", node_budget, "Branch node budget per solve");

  try {
    app.parse(argc, argv);
    global.format = format_from_string(format);
    if (prune->parsed()) {
      return cmd_prune(global, prune_input, prune_measure, prune_k, prune_solver, prune_all,
                       node_budget, brute_cap);
    }
    if (evaluate->parsed()) {
      return cmd_evaluate(global, eval_input, eval_slate, eval_measures, eval_ref);
    }
    if (axioms->parsed()) {
      return cmd_axioms(global, fixture_id, axioms_random, axiom_name, axiom_measure, trials,
                        axioms_list);
    }
    if (embed->parsed()) {
      return cmd_embed(global, embed_input, embed_transform, embed_eps, embed_delta, embed_n,
                       embed_out);
    }
    if (bench->parsed()) {
      return cmd_bench(global, bench_data, bench_bundled, bench_k, bench_cap, bench_out,
                       node_budget);
    }
    return kExitInput;
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? kExitOk : kExitInput;
  } catch (const BudgetError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitBudget;
  } catch (const InputError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitInput;
  } catch (const ContractError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitInput;
  } catch (const std::exception& error) {
    std::cerr << "internal error: " << error.what() << "\n";
    return 1;
  }
}
