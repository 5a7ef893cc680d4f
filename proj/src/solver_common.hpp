/**
 * @file solver_common.hpp
 * @brief Shared plumbing for the exact solvers: request validation,
 *        value comparison by measure direction, and budget accounting.
 */

#ifndef PRUNING_SOLVER_COMMON_HPP
#define PRUNING_SOLVER_COMMON_HPP

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>

#include "pruning/solve.hpp"

namespace pruning::detail {

inline constexpr Dist kInfDist = std::numeric_limits<Dist>::max();

void validate_bounds(const Instance& instance, MeasureId measure, int k);

/// True iff `candidate` is strictly better than `incumbent` for `measure`.
inline bool better(MeasureId measure, Dist candidate, Dist incumbent) {
  return higher_is_better(measure) ? candidate > incumbent : candidate < incumbent;
}

inline Dist worst_value(MeasureId measure) {
  return higher_is_better(measure) ? std::numeric_limits<Dist>::min() : kInfDist;
}

/// Decrementing node counter with an optional deadline. Exhaustion raises
/// BudgetError; a solver never returns a suboptimal answer.
class Budget {
 public:
  explicit Budget(const Limits& limits)
      : remaining_(limits.node_budget),
        deadline_(limits.time_budget
                      ? std::optional(std::chrono::steady_clock::now() + *limits.time_budget)
                      : std::nullopt) {}

  void tick(std::uint64_t cost = 1) {
    if (remaining_ < cost) throw BudgetError("node budget exhausted; solve incomplete");
    remaining_ -= cost;
    if (deadline_ && (++ticks_since_clock_ & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() > *deadline_) {
      throw BudgetError("time budget exhausted; solve incomplete");
    }
  }

  std::uint64_t used(std::uint64_t initial) const { return initial - remaining_; }

 private:
  std::uint64_t remaining_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t ticks_since_clock_ = 0;
};

/// Asserts that the slate's measure value equals the claimed optimum.
void check_result_consistency(const Instance& instance, MeasureId measure,
                              const SolveResult& result);

}  // namespace pruning::detail

#endif  // PRUNING_SOLVER_COMMON_HPP
