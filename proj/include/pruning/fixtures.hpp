/**
 * @file fixtures.hpp
 * @brief Compiled axiom counterexamples and witness instances, addressable
 *        by stable string ids so acceptance runs need no data files.
 *
 * The catalog carries one fixture per (measure, axiom) cell with its
 * expected verdict and, where meaningful, the exact optimal values of the
 * base and modified instances (original units).
 */

#ifndef PRUNING_FIXTURES_HPP
#define PRUNING_FIXTURES_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pruning/axioms.hpp"

namespace pruning {

struct Fixture {
  std::string id;  ///< e.g. "prop-cdc-not-extreme/coverage"
  Axiom axiom;
  MeasureId measure;
  bool expected_holds;
  std::function<AxiomCase()> make_case;
  std::optional<Rational> expected_base_value;      ///< original units
  std::optional<Rational> expected_modified_value;  ///< original units
};

/// All 15 (measure, axiom) cells, in measure-major order.
const std::vector<Fixture>& fixture_catalog();

const Fixture* find_fixture(const std::string& id);

struct FixtureOutcome {
  std::string id;
  VerdictKind verdict = VerdictKind::not_applicable;
  bool expected_holds = false;
  bool verdict_matches = false;
  bool values_match = false;  ///< true when no expected values are pinned
  std::optional<Rational> base_value;
  std::optional<Rational> modified_value;
};

FixtureOutcome run_fixture(const Fixture& fixture, const Limits& limits = {});

/// Named instances referenced by the fixtures (and usable from the CLI as
/// `fixture:<id>` inputs).
std::vector<std::string> fixture_instance_ids();
std::optional<Instance> fixture_instance(const std::string& id);

}  // namespace pruning

#endif  // PRUNING_FIXTURES_HPP
