/**
 * @file axioms.hpp
 * @brief Executable checkers for the five quality-measure axioms, plus
 *        seed-deterministic randomized confirmation drivers.
 *
 * Checkers evaluate concrete cases; universal claims are only ever probed
 * by randomized search, never declared proven. Modified instances are
 * re-validated before solving: when a modification makes a point dominated
 * the checker reports not_applicable rather than a verdict.
 */

#ifndef PRUNING_AXIOMS_HPP
#define PRUNING_AXIOMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pruning/solve.hpp"
#include "pruning/types.hpp"

namespace pruning {

enum class Axiom { monotonicity, eps_split, extremism, standout, outlier };

std::string to_string(Axiom axiom);
Axiom axiom_from_string(const std::string& token);

enum class PushDirection { up, down };

/// How an instance is perturbed. Coordinates are expressed in `scale`
/// units (0 means: the case instance's own scale); checkers convert to a
/// common scale internally, so a modification may be finer-grained than
/// the instance it perturbs.
struct Modification {
  Alternative replaced;                    ///< x, must be present in the instance
  std::vector<Alternative> replacements;   ///< {y} for monotonicity, {y_eps, z_eps} for eps-split
  std::optional<Rational> epsilon;         ///< eps-split bound, original units
  int pushed_objective = -1;               ///< extremism: coordinate index
  Coord push_amount = 0;                   ///< extremism: t > 0, in `scale` units
  PushDirection direction = PushDirection::up;
  Coord scale = 0;                         ///< units of the coordinates above
};

struct AxiomCase {
  Axiom axiom = Axiom::monotonicity;
  MeasureId measure = MeasureId::coverage;
  Instance instance;
  int k = 1;
  std::optional<Modification> modification;
};

enum class VerdictKind { holds, violated, not_applicable };

std::string to_string(VerdictKind kind);

/// Everything needed to independently re-check a verdict with solve_brute.
struct Witness {
  Rational base_value;                  ///< optimal value on the base instance, original units
  std::vector<Slate> base_optimal;      ///< full optimal set, base instance indices
  std::optional<Instance> modified;     ///< present for instance-modifying axioms
  std::optional<Rational> modified_value;
  std::vector<Slate> modified_optimal;  ///< indices into *modified
  std::string note;
};

struct AxiomVerdict {
  VerdictKind kind = VerdictKind::not_applicable;
  std::optional<Witness> witness;  ///< present whenever a verdict was reached
  std::string detail;
};

/// Improving a selected alternative to a dominating replacement must leave
/// some optimal slate containing the replacement.
AxiomVerdict check_monotonicity(const AxiomCase& axiom_case, const Limits& limits = {});

/// Splitting any alternative into two within-epsilon copies must not change
/// the optimal slates beyond swapping the copy back.
AxiomVerdict check_eps_split(const AxiomCase& axiom_case, const Limits& limits = {});

/// Pushing a selected alternative further out along an objective where it
/// is already extremal must leave some optimal slate containing it.
AxiomVerdict check_extremism(const AxiomCase& axiom_case, const Limits& limits = {});

/// Index of the alternative whose weakest directed lead over every other
/// alternative exceeds the strongest directed lead against it, if any.
/// At most one can exist (asserted).
std::optional<int> find_standout(const Instance& instance);

/// Index of the alternative farther (Manhattan) from every other
/// alternative than any two remaining alternatives are from each other.
std::optional<int> find_outlier(const Instance& instance);

enum class SpecialKind { standout, outlier };

/// Holds iff every optimal slate contains the special alternative.
/// Outlier consistency additionally requires k >= 2.
AxiomVerdict check_consistency(const Instance& instance, int k, MeasureId measure,
                               SpecialKind kind, const Limits& limits = {});

/// Dispatch on axiom_case.axiom.
AxiomVerdict check_axiom(const AxiomCase& axiom_case, const Limits& limits = {});

/// A sufficient eps-split epsilon for uniformity:
/// min(I_U(optimum)/3, d_min/2) * (1 - 10^-6), in original units, where
/// d_min is the smallest difference between two distinct pairwise
/// distances (infinite when all pairwise distances coincide).
Rational eps_split_sufficient_epsilon(const Instance& instance, int k,
                                      const Limits& limits = {});

struct TrialStats {
  int holds = 0;
  int violated = 0;
  int not_applicable = 0;
  std::string first_violation;  ///< replay pointer: trial index and seed
};

/// Runs `trials` randomly generated cases of the given axiom/measure pair
/// through the matching checker. Deterministic in `seed`.
TrialStats run_random_axiom_trials(Axiom axiom, MeasureId measure, int trials,
                                   std::uint64_t seed, const Limits& limits = {});

}  // namespace pruning

#endif  // PRUNING_AXIOMS_HPP
