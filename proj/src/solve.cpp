#include "pruning/solve.hpp"

#include <algorithm>

#include "solver_common.hpp"

namespace pruning {

std::string to_string(SolverId solver) {
  switch (solver) {
    case SolverId::automatic: return "auto";
    case SolverId::dp2d: return "dp2d";
    case SolverId::approval: return "approval";
    case SolverId::exact: return "exact";
    case SolverId::brute: return "brute";
  }
  throw InternalError("unknown solver id");
}

SolverId solver_from_string(const std::string& token) {
  if (token == "auto") return SolverId::automatic;
  if (token == "dp2d") return SolverId::dp2d;
  if (token == "approval") return SolverId::approval;
  if (token == "exact") return SolverId::exact;
  if (token == "brute") return SolverId::brute;
  throw InputError("unknown solver: " + token);
}

namespace {

SolverId pick_solver(const Instance& instance) {
  if (instance.d() == 2) return SolverId::dp2d;
  if (instance.all_approval() && instance.d() <= 20) return SolverId::approval;
  return SolverId::exact;
}

SolveResult dispatch(const SolveRequest& request, SolverId solver) {
  switch (solver) {
    case SolverId::dp2d:
      return request.measure == MeasureId::directed_coverage
                 ? solve_dp2d_directed(request.instance, request.k, request.limits)
                 : solve_dp2d_symmetric(request.instance, request.k, request.measure,
                                        request.limits);
    case SolverId::approval:
      return solve_approval(request.instance, request.k, request.measure, request.limits);
    case SolverId::exact:
      return solve_exact_general(request.instance, request.k, request.measure, request.limits);
    case SolverId::brute:
      return solve_brute(request.instance, request.k, request.measure, request.limits,
                         request.enumerate_all_optimal);
    case SolverId::automatic:
      break;
  }
  throw InternalError("unresolved solver dispatch");
}

}  // namespace

SolveResult solve(const SolveRequest& request) {
  detail::validate_bounds(request.instance, request.measure, request.k);
  const SolverId chosen =
      request.solver == SolverId::automatic ? pick_solver(request.instance) : request.solver;
  SolveResult result = dispatch(request, chosen);

  if (request.enumerate_all_optimal && !result.all_optimal.has_value()) {
    // The full optimal set is recovered by enumeration against the proven
    // optimum; this also cross-checks the solver's lexicographic tie-break.
    SolveResult enumerated = solve_brute(request.instance, request.k, request.measure,
                                         request.limits, /*enumerate_all_optimal=*/true);
    if (enumerated.optimal_value != result.optimal_value) {
      throw InternalError("enumeration disagrees with the solver optimum");
    }
    if (!(enumerated.slate == result.slate)) {
      throw InternalError("solver tie-break differs from lexicographic enumeration");
    }
    result.all_optimal = std::move(enumerated.all_optimal);
  }
  return result;
}

DualityGap duality_gap(const Instance& instance, int k, const Limits& limits) {
  if (k < 1 || k + 1 > instance.n()) {
    throw ContractError("duality_gap requires 1 <= k and k + 1 <= n");
  }
  SolveRequest cover_request{instance, MeasureId::coverage, k, SolverId::automatic, false, limits};
  SolveRequest disp_request{instance, MeasureId::uniformity, k + 1, SolverId::automatic, false,
                            limits};
  const Dist k_center = solve(cover_request).optimal_value;
  const Dist dispersion = solve(disp_request).optimal_value;
  if (!(k_center <= dispersion && dispersion <= 2 * k_center)) {
    throw InternalError("k-center / dispersion sandwich violated: K=" +
                        std::to_string(k_center) + " M=" + std::to_string(dispersion));
  }
  return DualityGap{k_center, dispersion, Rational(dispersion, k_center)};
}

}  // namespace pruning
