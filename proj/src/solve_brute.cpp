#include <algorithm>
#include <numeric>

#include "pruning/solve.hpp"
#include "solver_common.hpp"

namespace pruning {

namespace detail {

void validate_bounds(const Instance& instance, MeasureId measure, int k) {
  if (k < 1 || k > instance.n()) {
    throw ContractError("k = " + std::to_string(k) + " outside 1.." +
                        std::to_string(instance.n()));
  }
  if (measure == MeasureId::uniformity && k < 2) {
    throw ContractError("uniformity requires k >= 2");
  }
}

void check_result_consistency(const Instance& instance, MeasureId measure,
                              const SolveResult& result) {
  if (evaluate_measure(measure, instance, result.slate) != result.optimal_value) {
    throw InternalError("solver returned a slate whose value differs from the optimum");
  }
}

}  // namespace detail

namespace {

// C(n, k), saturating at cap + 1.
std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  BigInt value = 1;
  for (int i = 0; i < k; ++i) {
    value = value * (n - i) / (i + 1);
    if (value > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace

SolveResult solve_brute(const Instance& instance, int k, MeasureId measure,
                        const Limits& limits, bool enumerate_all_optimal) {
  detail::validate_bounds(instance, measure, k);
  const int n = instance.n();
  const std::uint64_t count = binomial_capped(n, k, limits.brute_cap);
  if (count > limits.brute_cap) {
    throw BudgetError("brute-force enumeration of C(" + std::to_string(n) + "," +
                      std::to_string(k) + ") slates exceeds the configured cap");
  }

  SolveResult result;
  result.solver_id = "brute-force";
  Dist best = detail::worst_value(measure);
  std::vector<Slate> optimal;

  Slate slate;
  slate.members.resize(k);
  std::iota(slate.members.begin(), slate.members.end(), 0);
  while (true) {
    ++result.stats.nodes;
    const Dist value = evaluate_measure(measure, instance, slate);
    if (detail::better(measure, value, best)) {
      best = value;
      optimal.clear();
      optimal.push_back(slate);
    } else if (value == best && enumerate_all_optimal) {
      optimal.push_back(slate);
    }

    // Advance to the next combination in lexicographic order.
    int pos = k - 1;
    while (pos >= 0 && slate.members[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++slate.members[pos];
    for (int i = pos + 1; i < k; ++i) slate.members[i] = slate.members[i - 1] + 1;
  }

  result.optimal_value = best;
  result.slate = optimal.front();
  if (enumerate_all_optimal) result.all_optimal = std::move(optimal);
  detail::check_result_consistency(instance, measure, result);
  return result;
}

}  // namespace pruning
