#include <algorithm>
#include <vector>

#include "pruning/geometry.hpp"
#include "pruning/solve.hpp"
#include "solver_common.hpp"

namespace pruning {

namespace {

using detail::Budget;
using detail::kInfDist;

using NormFn = Dist (*)(const Alternative&, const Alternative&);

// The canonical instance order (lexicographic by coordinates) sorts a
// two-objective Pareto set by strictly increasing first objective and
// strictly decreasing second objective. Both DPs rely on that order.
void require_two_objectives(const Instance& instance) {
  if (instance.d() != 2) {
    throw InputError("dp2d solvers require exactly 2 objectives, got " +
                     std::to_string(instance.d()));
  }
  for (int i = 0; i + 1 < instance.n(); ++i) {
    const auto& a = instance.alt(i).coords;
    const auto& b = instance.alt(i + 1).coords;
    if (!(a[0] < b[0] && a[1] > b[1])) {
      throw InternalError("2-objective instance is not an antichain staircase");
    }
  }
}

// Shared min-max DP for coverage and directed coverage on the sorted point
// sequence. cost(t, s) = Norm(a_t, a_s) is what covering point t with slate
// member s costs; between two chosen neighbours every point is served by
// the cheaper of the two, and the outermost chosen points serve the tails.
class CoverDp {
 public:
  CoverDp(const Instance& instance, int k, NormFn norm, Budget& budget)
      : instance_(instance), n_(instance.n()), k_(k), norm_(norm), budget_(budget) {
    fill_delta();
  }

  Dist cost(int target, int member) const {
    return norm_(instance_.alt(target), instance_.alt(member));
  }

  // Paper-oriented prefix table: T[i][l] = best value over slates of size l
  // within points 0..i that contain point i, counting only points 0..i.
  Dist prefix_value() {
    std::vector<std::vector<Dist>> t(n_, std::vector<Dist>(k_ + 1, kInfDist));
    for (int i = 0; i < n_; ++i) t[i][1] = cost(0, i);
    for (int l = 2; l <= k_; ++l) {
      for (int i = l - 1; i < n_; ++i) {
        Dist best = kInfDist;
        for (int j = l - 2; j < i; ++j) {
          budget_.tick();
          if (t[j][l - 1] == kInfDist) continue;
          best = std::min(best, std::max(t[j][l - 1], delta_[j][i]));
        }
        t[i][l] = best;
      }
    }
    Dist answer = kInfDist;
    for (int i = k_ - 1; i < n_; ++i) {
      if (t[i][k_] == kInfDist) continue;
      answer = std::min(answer, std::max(t[i][k_], cost(n_ - 1, i)));
    }
    return answer;
  }

  // Suffix table, used to rebuild the lexicographically smallest optimum:
  // R[i][l] = best value over slates of size l within points i..n-1 that
  // have point i as their leftmost member, counting only points i..n-1.
  void fill_suffix() {
    r_.assign(n_, std::vector<Dist>(k_ + 1, kInfDist));
    for (int i = 0; i < n_; ++i) r_[i][1] = cost(n_ - 1, i);
    for (int l = 2; l <= k_; ++l) {
      for (int i = 0; i + l <= n_; ++i) {
        Dist best = kInfDist;
        for (int j = i + 1; j + (l - 1) <= n_; ++j) {
          budget_.tick();
          if (r_[j][l - 1] == kInfDist) continue;
          best = std::min(best, std::max(delta_[i][j], r_[j][l - 1]));
        }
        r_[i][l] = best;
      }
    }
  }

  Dist suffix_value() const {
    Dist answer = kInfDist;
    for (int i = 0; i + k_ <= n_; ++i) {
      if (r_[i][k_] == kInfDist) continue;
      answer = std::min(answer, std::max(cost(0, i), r_[i][k_]));
    }
    return answer;
  }

  Slate reconstruct(Dist optimum) const {
    Slate slate;
    int head = -1;
    for (int i = 0; i + k_ <= n_; ++i) {
      if (r_[i][k_] != kInfDist && std::max(cost(0, i), r_[i][k_]) == optimum) {
        head = i;
        break;
      }
    }
    if (head < 0) throw InternalError("dp2d reconstruction found no head");
    slate.members.push_back(head);
    int remaining = k_ - 1;
    int p = head;
    while (remaining > 0) {
      int next = -1;
      for (int j = p + 1; j + remaining <= n_; ++j) {
        if (r_[j][remaining] != kInfDist && delta_[p][j] <= optimum &&
            r_[j][remaining] <= optimum) {
          next = j;
          break;
        }
      }
      if (next < 0) throw InternalError("dp2d reconstruction stalled");
      slate.members.push_back(next);
      p = next;
      --remaining;
    }
    return slate;
  }

 private:
  // delta[i][j] for i < j: worst cost of any point strictly between i and j
  // when both endpoints are selected.
  void fill_delta() {
    delta_.assign(n_, std::vector<Dist>(n_, 0));
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        Dist worst = 0;
        for (int t = i + 1; t < j; ++t) {
          budget_.tick();
          worst = std::max(worst, std::min(cost(t, i), cost(t, j)));
        }
        delta_[i][j] = worst;
      }
    }
  }

  const Instance& instance_;
  int n_;
  int k_;
  NormFn norm_;
  Budget& budget_;
  std::vector<std::vector<Dist>> delta_;
  std::vector<std::vector<Dist>> r_;
};

SolveResult solve_cover_dp(const Instance& instance, int k, MeasureId measure, NormFn norm,
                           const Limits& limits, const char* solver_id) {
  Budget budget(limits);
  CoverDp dp(instance, k, norm, budget);
  const Dist via_prefix = dp.prefix_value();
  dp.fill_suffix();
  const Dist via_suffix = dp.suffix_value();
  if (via_prefix != via_suffix) {
    throw InternalError("dp2d prefix and suffix recursions disagree");
  }
  SolveResult result;
  result.solver_id = solver_id;
  result.optimal_value = via_prefix;
  result.slate = dp.reconstruct(via_prefix);
  result.stats.nodes = budget.used(limits.node_budget);
  detail::check_result_consistency(instance, measure, result);
  return result;
}

}  // namespace

SolveResult solve_dp2d_directed(const Instance& instance, int k, const Limits& limits) {
  detail::validate_bounds(instance, MeasureId::directed_coverage, k);
  require_two_objectives(instance);
  return solve_cover_dp(instance, k, MeasureId::directed_coverage, directed, limits,
                        "dp2d-directed");
}

SolveResult solve_dp2d_symmetric(const Instance& instance, int k, MeasureId measure,
                                 const Limits& limits) {
  detail::validate_bounds(instance, measure, k);
  if (measure == MeasureId::directed_coverage) {
    throw InputError("solve_dp2d_symmetric handles uniformity and coverage only");
  }
  require_two_objectives(instance);

  // Line embedding phi(a) = a_1 - a_2. For a two-objective antichain the
  // Manhattan distance equals the difference of the embedded positions.
  const int n = instance.n();
  std::vector<Dist> phi(n);
  for (int i = 0; i < n; ++i) {
    phi[i] = instance.alt(i).coords[0] - instance.alt(i).coords[1];
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (manhattan(instance.alt(i), instance.alt(j)) != phi[j] - phi[i]) {
        throw InternalError("line embedding failed to preserve the Manhattan distance");
      }
    }
  }

  if (measure == MeasureId::coverage) {
    return solve_cover_dp(instance, k, measure, manhattan, limits, "dp2d-line");
  }

  // Uniformity: max-min dispersion over the embedded line.
  // U[i][l] = best min-gap choosing l points from i..n-1 with i leftmost.
  Budget budget(limits);
  std::vector<std::vector<Dist>> u(n, std::vector<Dist>(k + 1, -1));
  for (int i = 0; i < n; ++i) u[i][1] = kInfDist;
  for (int l = 2; l <= k; ++l) {
    for (int i = 0; i + l <= n; ++i) {
      Dist best = -1;
      for (int j = i + 1; j + (l - 1) <= n; ++j) {
        budget.tick();
        if (u[j][l - 1] < 0) continue;
        best = std::max(best, std::min(phi[j] - phi[i], u[j][l - 1]));
      }
      u[i][l] = best;
    }
  }
  Dist optimum = -1;
  for (int i = 0; i + k <= n; ++i) optimum = std::max(optimum, u[i][k]);
  if (optimum < 0) throw InternalError("dispersion DP produced no value");

  Slate slate;
  int head = -1;
  for (int i = 0; i + k <= n; ++i) {
    if (u[i][k] == optimum) {
      head = i;
      break;
    }
  }
  slate.members.push_back(head);
  int remaining = k - 1;
  int p = head;
  while (remaining > 0) {
    int next = -1;
    for (int j = p + 1; j + remaining <= n; ++j) {
      const Dist continuation = remaining == 1 ? kInfDist : u[j][remaining];
      if (continuation >= optimum && phi[j] - phi[p] >= optimum) {
        next = j;
        break;
      }
    }
    if (next < 0) throw InternalError("dispersion reconstruction stalled");
    slate.members.push_back(next);
    p = next;
    --remaining;
  }

  SolveResult result;
  result.solver_id = "dp2d-line";
  result.optimal_value = optimum;
  result.slate = std::move(slate);
  result.stats.nodes = budget.used(limits.node_budget);
  detail::check_result_consistency(instance, measure, result);
  return result;
}

}  // namespace pruning
