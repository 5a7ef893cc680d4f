#include <algorithm>
#include <map>
#include <numeric>

#include "pruning/solve.hpp"
#include "solver_common.hpp"

namespace pruning {

SolveResult solve_approval(const Instance& instance, int k, MeasureId measure,
                           const Limits& limits) {
  detail::validate_bounds(instance, measure, k);
  if (!instance.all_approval()) {
    throw InputError("approval solver requires every objective kind to be approval");
  }
  if (instance.d() > 20) {
    throw InputError("approval solver limited to 20 objectives");
  }

  // Equivalence classes of identical coordinate vectors, represented by
  // their smallest member index. Ingestion deduplicates, so classes are
  // singletons for validated instances; the general structure is kept for
  // clarity and for the k > #classes seat-filling rule.
  std::map<std::vector<Coord>, std::vector<std::int32_t>> classes;
  for (int i = 0; i < instance.n(); ++i) {
    classes[instance.alt(i).coords].push_back(i);
  }
  std::vector<std::int32_t> reps;
  reps.reserve(classes.size());
  for (const auto& [coords, members] : classes) reps.push_back(members.front());
  std::sort(reps.begin(), reps.end());
  const int class_count = static_cast<int>(reps.size());

  SolveResult result;
  result.solver_id = "approval-classes";

  if (k >= class_count) {
    // One seat per class covers every point at distance zero; extra seats
    // are filled with the smallest duplicate indices and cannot change any
    // measure except uniformity, which collapses to zero.
    Slate slate;
    slate.members = reps;
    for (std::int32_t i = 0; i < instance.n() && slate.k() < k; ++i) {
      if (!std::binary_search(reps.begin(), reps.end(), i)) slate.members.push_back(i);
    }
    std::sort(slate.members.begin(), slate.members.end());
    if (k > class_count) {
      result.stats.notes.push_back(
          "k exceeds the number of equivalence classes; seats filled with duplicates" +
          std::string(measure == MeasureId::uniformity ? " (uniformity degenerates to 0)" : ""));
    }
    result.slate = std::move(slate);
    result.optimal_value = evaluate_measure(measure, instance, result.slate);
    detail::check_result_consistency(instance, measure, result);
    return result;
  }

  detail::Budget budget(limits);
  Dist best = detail::worst_value(measure);
  Slate best_slate;

  // Enumerate size-k subsets of class representatives in lexicographic
  // order; picking two equivalent alternatives is never optimal.
  std::vector<int> choice(k);
  std::iota(choice.begin(), choice.end(), 0);
  while (true) {
    budget.tick();
    Slate slate;
    slate.members.reserve(k);
    for (int c : choice) slate.members.push_back(reps[c]);
    const Dist value = evaluate_measure(measure, instance, slate);
    if (detail::better(measure, value, best)) {
      best = value;
      best_slate = std::move(slate);
    }

    int pos = k - 1;
    while (pos >= 0 && choice[pos] == class_count - k + pos) --pos;
    if (pos < 0) break;
    ++choice[pos];
    for (int i = pos + 1; i < k; ++i) choice[i] = choice[i - 1] + 1;
  }

  result.optimal_value = best;
  result.slate = std::move(best_slate);
  result.stats.nodes = budget.used(limits.node_budget);
  detail::check_result_consistency(instance, measure, result);
  return result;
}

}  // namespace pruning
