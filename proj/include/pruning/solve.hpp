/**
 * @file solve.hpp
 * @brief Exact solvers for the three Pareto pruning problems.
 *
 * Four solver families, all exact:
 *  - dp2d: dynamic programs over the sorted point sequence for two
 *    objectives (line embedding for uniformity/coverage, directed-distance
 *    recursion for directed coverage),
 *  - approval: equivalence-class enumeration for approval objectives,
 *  - exact: threshold decomposition with branch-and-bound feasibility
 *    checks for any dimension,
 *  - brute: full slate enumeration, used as the testing oracle.
 *
 * Among equally optimal slates every solver returns the lexicographically
 * smallest index set (indices refer to the instance's canonical order).
 */

#ifndef PRUNING_SOLVE_HPP
#define PRUNING_SOLVE_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "pruning/measures.hpp"
#include "pruning/types.hpp"

namespace pruning {

enum class SolverId { automatic, dp2d, approval, exact, brute };

std::string to_string(SolverId solver);
SolverId solver_from_string(const std::string& token);

struct Limits {
  /// Branch nodes allowed across one solve (feasibility search included).
  std::uint64_t node_budget = 10'000'000;
  /// Wall-clock budget; unlimited when absent.
  std::optional<std::chrono::milliseconds> time_budget;
  /// Maximum number of slates the brute-force solver may enumerate.
  std::uint64_t brute_cap = 5'000'000;
};

struct SolveRequest {
  Instance instance;
  MeasureId measure = MeasureId::coverage;
  int k = 1;
  SolverId solver = SolverId::automatic;
  bool enumerate_all_optimal = false;
  Limits limits;
};

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t feasibility_checks = 0;
  std::size_t ladder_size = 0;
  std::vector<std::string> notes;
};

struct SolveResult {
  Dist optimal_value = 0;           ///< scaled units
  Slate slate;                      ///< lexicographically smallest optimum
  std::optional<std::vector<Slate>> all_optimal;  ///< full set when requested
  std::string solver_id;
  SolveStats stats;
};

/// Sorted distinct candidate objective values: zero plus every pairwise
/// Manhattan (uniformity/coverage) or directed (directed coverage)
/// distance of the instance. The optimum is always a ladder element.
std::vector<Dist> threshold_ladder(const Instance& instance, MeasureId measure);

/// Dispatcher. Validates the request (1 <= k <= n, k >= 2 for uniformity),
/// picks a solver when `automatic` (dp2d for d == 2, approval when all
/// objectives are approval and d <= 20, exact otherwise), and fills
/// all_optimal by enumeration when requested.
SolveResult solve(const SolveRequest& request);

/// Directed-coverage DP for d == 2 over points sorted by the first
/// objective. Exact optimum in O(n^3 + n^2 k).
SolveResult solve_dp2d_directed(const Instance& instance, int k, const Limits& limits = {});

/// Uniformity / coverage DP for d == 2 via the distance-preserving line
/// embedding phi(a) = a_1 - a_2.
SolveResult solve_dp2d_symmetric(const Instance& instance, int k, MeasureId measure,
                                 const Limits& limits = {});

/// Enumeration over equivalence classes of identical coordinate vectors;
/// requires every objective kind to be approval and d <= 20.
SolveResult solve_approval(const Instance& instance, int k, MeasureId measure,
                           const Limits& limits = {});

/// Threshold decomposition: binary search over the ladder with an exact
/// set-cover (coverage, directed coverage) or independent-set (uniformity)
/// branch-and-bound feasibility check per candidate threshold.
SolveResult solve_exact_general(const Instance& instance, int k, MeasureId measure,
                                const Limits& limits = {});

/// Enumerates every slate; returns the optimum and, on request, the
/// complete set of optimal slates.
SolveResult solve_brute(const Instance& instance, int k, MeasureId measure,
                        const Limits& limits = {}, bool enumerate_all_optimal = false);

struct DualityGap {
  Dist k_center;        ///< K_k: optimal coverage value with k points
  Dist dispersion;      ///< M_{k+1}: optimal uniformity value with k+1 points
  Rational ratio;       ///< M_{k+1} / K_k
};

/// Computes K_k and M_{k+1} with exact solvers and asserts the sandwich
/// K_k <= M_{k+1} <= 2 K_k before returning. Requires k + 1 <= n.
DualityGap duality_gap(const Instance& instance, int k, const Limits& limits = {});

}  // namespace pruning

#endif  // PRUNING_SOLVE_HPP
