#include "pruning/fixtures.hpp"

#include <algorithm>
#include <map>

#include "pruning/embeddings.hpp"

namespace pruning {

namespace {

Instance ints(std::string name, std::vector<std::vector<Coord>> rows) {
  std::vector<Alternative> points;
  points.reserve(rows.size());
  for (auto& row : rows) points.push_back(Alternative{std::move(row)});
  return make_instance(std::move(name), std::move(points), ValidationMode::strict);
}

// The five-point planar cross, lifted to a valid 4-objective instance.
// The lift preserves Manhattan distances and halves directed ones.
Instance lifted_cross() {
  PointSet cross;
  cross.points = {Alternative{{-1, 1}}, Alternative{{-1, -1}}, Alternative{{0, 0}},
                  Alternative{{1, -1}}, Alternative{{1, 1}}};
  return antisymmetric_lift(cross, "eps-split-cross");
}

// Splits the cross center (0,0,0,0) into the lifts of (-1/4, 0) and
// (1/4, 0), expressed in eighths.
Modification cross_center_split() {
  Modification mod;
  mod.replaced = Alternative{{0, 0, 0, 0}};
  mod.replacements = {Alternative{{-1, 1, 0, 0}}, Alternative{{1, -1, 0, 0}}};
  mod.epsilon = Rational(999'999, 1'000'000);
  mod.scale = 8;
  return mod;
}

AxiomCase replacement_case(Axiom axiom, MeasureId measure, Instance instance, int k,
                           Modification mod) {
  AxiomCase axiom_case;
  axiom_case.axiom = axiom;
  axiom_case.measure = measure;
  axiom_case.instance = std::move(instance);
  axiom_case.k = k;
  axiom_case.modification = std::move(mod);
  return axiom_case;
}

AxiomCase special_case(Axiom axiom, MeasureId measure, Instance instance, int k) {
  AxiomCase axiom_case;
  axiom_case.axiom = axiom;
  axiom_case.measure = measure;
  axiom_case.instance = std::move(instance);
  axiom_case.k = k;
  return axiom_case;
}

Modification replace_by(std::vector<Coord> from, std::vector<Coord> to) {
  Modification mod;
  mod.replaced = Alternative{std::move(from)};
  mod.replacements = {Alternative{std::move(to)}};
  return mod;
}

Modification push(std::vector<Coord> target, int objective, Coord amount, PushDirection dir) {
  Modification mod;
  mod.replaced = Alternative{std::move(target)};
  mod.pushed_objective = objective;
  mod.push_amount = amount;
  mod.direction = dir;
  return mod;
}

std::vector<Fixture> build_catalog() {
  std::vector<Fixture> catalog;

  // --- uniformity -------------------------------------------------------
  catalog.push_back(Fixture{
      "prop-unic-not-monotonic/uniformity", Axiom::monotonicity, MeasureId::uniformity, false,
      [] {
        return replacement_case(Axiom::monotonicity, MeasureId::uniformity,
                                ints("unic-not-monotonic-uni",
                                     {{2, 0, 0}, {0, 2, 0}, {0, -2, 1}}),
                                2, replace_by({0, -2, 1}, {0, 0, 1}));
      },
      Rational(5), Rational(4)});
  catalog.push_back(Fixture{
      "prop-uni-epssplit/uniformity", Axiom::eps_split, MeasureId::uniformity, true,
      [] {
        return replacement_case(Axiom::eps_split, MeasureId::uniformity, lifted_cross(), 2,
                                cross_center_split());
      },
      Rational(4), Rational(4)});
  catalog.push_back(Fixture{
      "prop-uni-extreme/uniformity", Axiom::extremism, MeasureId::uniformity, true,
      [] {
        return replacement_case(Axiom::extremism, MeasureId::uniformity,
                                ints("uni-extreme", {{0, 3}, {1, 1}, {3, 0}}), 2,
                                push({3, 0}, 0, 2, PushDirection::up));
      },
      Rational(6), Rational(8)});
  catalog.push_back(Fixture{
      "prop-unic-not-winner/uniformity", Axiom::standout, MeasureId::uniformity, false,
      [] {
        return special_case(Axiom::standout, MeasureId::uniformity,
                            ints("unic-not-winner-uni", {{0, 10}, {9, 9}, {10, 0}}), 2);
      },
      Rational(20), std::nullopt});
  catalog.push_back(Fixture{
      "prop-uni-dc-not-distance/uniformity", Axiom::outlier, MeasureId::uniformity, false,
      [] {
        return special_case(
            Axiom::outlier, MeasureId::uniformity,
            ints("uni-dc-not-distance",
                 {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 20}}),
            3);
      },
      Rational(2), std::nullopt});

  // --- coverage ---------------------------------------------------------
  catalog.push_back(Fixture{
      "prop-unic-not-monotonic/coverage", Axiom::monotonicity, MeasureId::coverage, false,
      [] {
        return replacement_case(Axiom::monotonicity, MeasureId::coverage,
                                ints("unic-not-monotonic",
                                     {{3, -10, 0}, {1, 3, 0}, {2, 2, 1}, {0, 0, 3}}),
                                2, replace_by({3, -10, 0}, {3, 1, 0}));
      },
      Rational(6), Rational(3)});
  catalog.push_back(Fixture{
      "prop-cdc-not-epssplit/coverage", Axiom::eps_split, MeasureId::coverage, false,
      [] {
        return replacement_case(Axiom::eps_split, MeasureId::coverage, lifted_cross(), 2,
                                cross_center_split());
      },
      Rational(2), Rational(7, 4)});
  catalog.push_back(Fixture{
      "prop-cdc-not-extreme/coverage", Axiom::extremism, MeasureId::coverage, false,
      [] {
        return replacement_case(Axiom::extremism, MeasureId::coverage,
                                ints("cdc-not-extreme", {{3, 0, 0}, {0, 3, 0}, {2, 1, 1}}), 1,
                                push({2, 1, 1}, 2, 2, PushDirection::up));
      },
      Rational(5), Rational(6)});
  catalog.push_back(Fixture{
      "prop-unic-not-winner/coverage", Axiom::standout, MeasureId::coverage, false,
      [] {
        return special_case(Axiom::standout, MeasureId::coverage,
                            ints("unic-not-winner", {{0, 1}, {2, 0}}), 1);
      },
      Rational(3), std::nullopt});
  catalog.push_back(Fixture{
      "prop-c-distance/coverage", Axiom::outlier, MeasureId::coverage, true,
      [] {
        return special_case(
            Axiom::outlier, MeasureId::coverage,
            ints("uni-dc-not-distance",
                 {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 20}}),
            2);
      },
      Rational(2), std::nullopt});

  // --- directed coverage -------------------------------------------------
  catalog.push_back(Fixture{
      "prop-dc-monotonic/dcoverage", Axiom::monotonicity, MeasureId::directed_coverage, true,
      [] {
        return replacement_case(Axiom::monotonicity, MeasureId::directed_coverage,
                                ints("dc-monotonic", {{2, 0}, {0, 1}}), 1,
                                replace_by({2, 0}, {3, 0}));
      },
      Rational(1), Rational(1)});
  catalog.push_back(Fixture{
      "prop-cdc-not-epssplit/dcoverage", Axiom::eps_split, MeasureId::directed_coverage, false,
      [] {
        return replacement_case(Axiom::eps_split, MeasureId::directed_coverage, lifted_cross(),
                                2, cross_center_split());
      },
      Rational(1), Rational(7, 8)});
  catalog.push_back(Fixture{
      "prop-cdc-not-extreme/dcoverage", Axiom::extremism, MeasureId::directed_coverage, false,
      [] {
        return replacement_case(Axiom::extremism, MeasureId::directed_coverage,
                                ints("cdc-not-extreme-dc", {{2, 0}, {0, 1}}), 1,
                                push({2, 0}, 1, 3, PushDirection::down));
      },
      Rational(1), Rational(2)});
  catalog.push_back(Fixture{
      "prop-dc-winner/dcoverage", Axiom::standout, MeasureId::directed_coverage, true,
      [] {
        return special_case(Axiom::standout, MeasureId::directed_coverage,
                            ints("dc-winner", {{0, 1}, {2, 0}}), 1);
      },
      Rational(1), std::nullopt});
  catalog.push_back(Fixture{
      "prop-uni-dc-not-distance/dcoverage", Axiom::outlier, MeasureId::directed_coverage, false,
      [] {
        return special_case(Axiom::outlier, MeasureId::directed_coverage,
                            ints("uni-dc-not-distance-dc",
                                 {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, -10}}),
                            2);
      },
      Rational(1), std::nullopt});

  return catalog;
}

Instance split_cross_instance() {
  PointSet cross;
  // Planar cross with the center split into (-1/4, 0) and (1/4, 0),
  // expressed in quarters.
  cross.points = {Alternative{{-4, 4}}, Alternative{{-4, -4}}, Alternative{{-1, 0}},
                  Alternative{{1, 0}},  Alternative{{4, -4}},  Alternative{{4, 4}}};
  cross.scale = 4;
  return antisymmetric_lift(cross, "eps-split-cross-eps");
}

}  // namespace

const std::vector<Fixture>& fixture_catalog() {
  static const std::vector<Fixture> catalog = build_catalog();
  return catalog;
}

const Fixture* find_fixture(const std::string& id) {
  for (const Fixture& fixture : fixture_catalog()) {
    if (fixture.id == id) return &fixture;
  }
  return nullptr;
}

FixtureOutcome run_fixture(const Fixture& fixture, const Limits& limits) {
  const AxiomCase axiom_case = fixture.make_case();
  const AxiomVerdict verdict = check_axiom(axiom_case, limits);

  FixtureOutcome outcome;
  outcome.id = fixture.id;
  outcome.verdict = verdict.kind;
  outcome.expected_holds = fixture.expected_holds;
  outcome.verdict_matches =
      verdict.kind == (fixture.expected_holds ? VerdictKind::holds : VerdictKind::violated);

  outcome.values_match = true;
  if (verdict.witness.has_value()) {
    outcome.base_value = verdict.witness->base_value;
    outcome.modified_value = verdict.witness->modified_value;
  }
  if (fixture.expected_base_value.has_value()) {
    outcome.values_match = outcome.values_match && outcome.base_value.has_value() &&
                           *outcome.base_value == *fixture.expected_base_value;
  }
  if (fixture.expected_modified_value.has_value()) {
    outcome.values_match = outcome.values_match && outcome.modified_value.has_value() &&
                           *outcome.modified_value == *fixture.expected_modified_value;
  }
  return outcome;
}

namespace {

std::map<std::string, Instance> build_instance_catalog() {
  std::map<std::string, Instance> catalog;
  auto put = [&catalog](const std::string& id, Instance instance) {
    catalog.emplace(id, std::move(instance));
  };

  put("prop-unic-not-monotonic-A",
      ints("prop-unic-not-monotonic-A", {{3, -10, 0}, {1, 3, 0}, {2, 2, 1}, {0, 0, 3}}));
  put("prop-unic-not-monotonic-A-mod",
      ints("prop-unic-not-monotonic-A-mod", {{3, 1, 0}, {1, 3, 0}, {2, 2, 1}, {0, 0, 3}}));
  put("prop-unic-not-monotonic-uniformity-A",
      ints("prop-unic-not-monotonic-uniformity-A", {{2, 0, 0}, {0, 2, 0}, {0, -2, 1}}));
  put("prop-unic-not-monotonic-uniformity-A-mod",
      ints("prop-unic-not-monotonic-uniformity-A-mod", {{2, 0, 0}, {0, 2, 0}, {0, 0, 1}}));
  put("prop-dc-monotonic-A", ints("prop-dc-monotonic-A", {{2, 0}, {0, 1}}));
  put("prop-dc-monotonic-A-mod", ints("prop-dc-monotonic-A-mod", {{3, 0}, {0, 1}}));
  put("prop-cdc-not-epssplit-lift-A", lifted_cross());
  put("prop-cdc-not-epssplit-lift-A-eps", split_cross_instance());
  put("prop-uni-extreme-A", ints("prop-uni-extreme-A", {{0, 3}, {1, 1}, {3, 0}}));
  put("prop-uni-extreme-A-mod", ints("prop-uni-extreme-A-mod", {{0, 3}, {1, 1}, {5, 0}}));
  put("prop-cdc-not-extreme-A", ints("prop-cdc-not-extreme-A", {{3, 0, 0}, {0, 3, 0}, {2, 1, 1}}));
  put("prop-cdc-not-extreme-A-mod",
      ints("prop-cdc-not-extreme-A-mod", {{3, 0, 0}, {0, 3, 0}, {2, 1, 3}}));
  put("prop-cdc-not-extreme-dc-A", ints("prop-cdc-not-extreme-dc-A", {{2, 0}, {0, 1}}));
  put("prop-cdc-not-extreme-dc-A-mod", ints("prop-cdc-not-extreme-dc-A-mod", {{2, -3}, {0, 1}}));
  put("prop-unic-not-winner-A", ints("prop-unic-not-winner-A", {{0, 1}, {2, 0}}));
  put("prop-unic-not-winner-uniformity-A",
      ints("prop-unic-not-winner-uniformity-A", {{0, 10}, {9, 9}, {10, 0}}));
  put("prop-uni-dc-not-distance-A",
      ints("prop-uni-dc-not-distance-A",
           {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 20}}));
  put("prop-uni-dc-not-distance-dc-A",
      ints("prop-uni-dc-not-distance-dc-A", {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, -10}}));
  return catalog;
}

const std::map<std::string, Instance>& instance_catalog() {
  static const std::map<std::string, Instance> catalog = build_instance_catalog();
  return catalog;
}

}  // namespace

std::vector<std::string> fixture_instance_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, instance] : instance_catalog()) ids.push_back(id);
  return ids;
}

std::optional<Instance> fixture_instance(const std::string& id) {
  const auto& catalog = instance_catalog();
  const auto found = catalog.find(id);
  if (found == catalog.end()) return std::nullopt;
  return found->second;
}

}  // namespace pruning
