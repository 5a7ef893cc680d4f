#include <algorithm>
#include <cstdint>
#include <vector>

#include "pruning/geometry.hpp"
#include "pruning/solve.hpp"
#include "solver_common.hpp"

namespace pruning {

namespace {

using detail::Budget;

// Fixed-width bitset over instance indices.
class Mask {
 public:
  explicit Mask(int bits = 0) : bits_(bits), words_((bits + 63) / 64, 0) {}

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int total = 0;
    for (std::uint64_t w : words_) total += __builtin_popcountll(w);
    return total;
  }

  Mask& operator|=(const Mask& other) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
  }

  int count_and_not(const Mask& covered) const {
    int total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      total += __builtin_popcountll(words_[w] & ~covered.words_[w]);
    }
    return total;
  }

  bool covers(const Mask& required) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (required.words_[w] & ~words_[w]) return false;
    }
    return true;
  }

  int size() const { return bits_; }

 private:
  int bits_;
  std::vector<std::uint64_t> words_;
};

Dist pair_norm(MeasureId measure, const Alternative& target, const Alternative& member) {
  return measure == MeasureId::directed_coverage ? directed(target, member)
                                                 : manhattan(target, member);
}

// Exact feasibility of "cover every point within tau using exactly k
// centers from the allowed set, including all forced centers".
class CoverFeasibility {
 public:
  CoverFeasibility(const Instance& instance, MeasureId measure, Dist tau,
                   const std::vector<bool>& excluded, Budget& budget)
      : n_(instance.n()), budget_(budget), covers_(n_, Mask(n_)), excluded_(excluded) {
    for (int s = 0; s < n_; ++s) {
      for (int t = 0; t < n_; ++t) {
        if (pair_norm(measure, instance.alt(t), instance.alt(s)) <= tau) covers_[s].set(t);
      }
    }
  }

  bool feasible(const std::vector<std::int32_t>& forced, int k) {
    if (static_cast<int>(forced.size()) > k) return false;
    int allowed_total = 0;
    for (int s = 0; s < n_; ++s) {
      if (!excluded_[s]) ++allowed_total;
    }
    if (allowed_total < k) return false;  // cannot pad to exactly k centers

    Mask covered(n_);
    std::vector<bool> used(n_, false);
    for (std::int32_t s : forced) {
      covered |= covers_[s];
      used[s] = true;
    }
    return search(covered, used, k - static_cast<int>(forced.size()));
  }

 private:
  bool search(const Mask& covered, std::vector<bool>& used, int slots) {
    budget_.tick();
    if (covered.count() == n_) return true;  // spare slots padded arbitrarily
    if (slots == 0) return false;

    // Branch on the uncovered point with the fewest usable centers.
    int branch_point = -1;
    int branch_degree = n_ + 1;
    int max_gain = 0;
    for (int t = 0; t < n_; ++t) {
      if (covered.test(t)) continue;
      int degree = 0;
      for (int s = 0; s < n_; ++s) {
        if (!excluded_[s] && !used[s] && covers_[s].test(t)) ++degree;
      }
      if (degree == 0) return false;
      if (degree < branch_degree) {
        branch_degree = degree;
        branch_point = t;
      }
    }
    for (int s = 0; s < n_; ++s) {
      if (!excluded_[s] && !used[s]) max_gain = std::max(max_gain, covers_[s].count_and_not(covered));
    }
    const int uncovered = n_ - covered.count();
    if (max_gain == 0 || (uncovered + max_gain - 1) / max_gain > slots) return false;

    // Each solution covering branch_point uses one of its candidate
    // centers; trying them in index order with earlier candidates banned in
    // later branches keeps the search tree free of repeats.
    std::vector<int> candidates;
    for (int s = 0; s < n_; ++s) {
      if (!excluded_[s] && !used[s] && covers_[s].test(branch_point)) candidates.push_back(s);
    }
    bool found = false;
    std::size_t tried = 0;
    for (; tried < candidates.size() && !found; ++tried) {
      Mask next = covered;
      next |= covers_[candidates[tried]];
      used[candidates[tried]] = true;
      found = search(next, used, slots - 1);
      // Leave the candidate marked: a solution using it was fully explored,
      // so later sibling branches may ban it.
    }
    for (std::size_t b = 0; b < tried; ++b) used[candidates[b]] = false;
    return found;
  }

  int n_;
  Budget& budget_;
  std::vector<Mask> covers_;
  const std::vector<bool>& excluded_;
};

// Exact feasibility of "pick exactly k points, pairwise Manhattan distance
// at least tau, containing all forced points". Edges join pairs closer
// than tau.
class DispersionFeasibility {
 public:
  DispersionFeasibility(const Instance& instance, Dist tau, const std::vector<bool>& excluded,
                        Budget& budget)
      : n_(instance.n()), budget_(budget), conflict_(n_, Mask(n_)), excluded_(excluded) {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i != j && manhattan(instance.alt(i), instance.alt(j)) < tau) conflict_[i].set(j);
      }
    }
  }

  bool feasible(const std::vector<std::int32_t>& forced, int k) {
    std::vector<bool> alive(n_, true);
    for (int i = 0; i < n_; ++i) alive[i] = !excluded_[i];
    for (std::int32_t f : forced) {
      if (!alive[f]) return false;
    }
    for (std::size_t a = 0; a < forced.size(); ++a) {
      for (std::size_t b = a + 1; b < forced.size(); ++b) {
        if (conflict_[forced[a]].test(forced[b])) return false;
      }
    }
    std::vector<int> candidates;
    for (int i = 0; i < n_; ++i) {
      if (!alive[i]) continue;
      bool is_forced = std::find(forced.begin(), forced.end(), i) != forced.end();
      if (is_forced) continue;
      bool conflicts = false;
      for (std::int32_t f : forced) conflicts = conflicts || conflict_[f].test(i);
      if (!conflicts) candidates.push_back(i);
    }
    return search(candidates, k - static_cast<int>(forced.size()));
  }

 private:
  bool search(std::vector<int> candidates, int needed) {
    budget_.tick();
    if (needed <= 0) return true;
    if (static_cast<int>(candidates.size()) < needed) return false;

    // Candidates conflict-free within the remaining pool can always be
    // taken; only contested vertices need branching.
    const int v = candidates.front();
    int degree = 0;
    for (int u : candidates) {
      if (u != v && conflict_[v].test(u)) ++degree;
    }
    std::vector<int> without_v(candidates.begin() + 1, candidates.end());
    if (degree == 0) {
      return search(std::move(without_v), needed - 1);
    }
    std::vector<int> compatible;
    for (int u : without_v) {
      if (!conflict_[v].test(u)) compatible.push_back(u);
    }
    if (search(std::move(compatible), needed - 1)) return true;
    return search(std::move(without_v), needed);
  }

  int n_;
  Budget& budget_;
  std::vector<Mask> conflict_;
  const std::vector<bool>& excluded_;
};

}  // namespace

std::vector<Dist> threshold_ladder(const Instance& instance, MeasureId measure) {
  std::vector<Dist> values{0};
  for (int i = 0; i < instance.n(); ++i) {
    for (int j = i + 1; j < instance.n(); ++j) {
      if (measure == MeasureId::directed_coverage) {
        values.push_back(directed(instance.alt(i), instance.alt(j)));
        values.push_back(directed(instance.alt(j), instance.alt(i)));
      } else {
        values.push_back(manhattan(instance.alt(i), instance.alt(j)));
      }
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

SolveResult solve_exact_general(const Instance& instance, int k, MeasureId measure,
                                const Limits& limits) {
  detail::validate_bounds(instance, measure, k);
  const int n = instance.n();
  Budget budget(limits);
  SolveResult result;
  result.solver_id = "threshold-bnb";

  const std::vector<Dist> ladder = threshold_ladder(instance, measure);
  result.stats.ladder_size = ladder.size();
  const std::vector<bool> nothing_excluded(n, false);
  const std::vector<std::int32_t> nothing_forced;

  auto cover_feasible = [&](Dist tau, const std::vector<std::int32_t>& forced,
                            const std::vector<bool>& excluded) {
    ++result.stats.feasibility_checks;
    CoverFeasibility check(instance, measure, tau, excluded, budget);
    return check.feasible(forced, k);
  };
  auto dispersion_feasible = [&](Dist tau, const std::vector<std::int32_t>& forced,
                                 const std::vector<bool>& excluded) {
    ++result.stats.feasibility_checks;
    DispersionFeasibility check(instance, tau, excluded, budget);
    return check.feasible(forced, k);
  };

  Dist optimum = 0;
  if (measure == MeasureId::uniformity) {
    // Largest feasible threshold. tau = 0 is trivially feasible; every
    // probe preserves the invariant feasible(lo) and !feasible(hi).
    std::size_t lo = 0;
    std::size_t hi = ladder.size();
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (dispersion_feasible(ladder[mid], nothing_forced, nothing_excluded)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    if (!dispersion_feasible(ladder[lo], nothing_forced, nothing_excluded)) {
      throw InternalError("binary search invariant violated: lower bound infeasible");
    }
    if (hi < ladder.size() && dispersion_feasible(ladder[hi], nothing_forced, nothing_excluded)) {
      throw InternalError("binary search invariant violated: feasibility not monotone");
    }
    optimum = ladder[lo];
  } else {
    // Smallest feasible threshold; the maximum pairwise distance is always
    // feasible since one center reaches everything.
    std::size_t lo = 0;
    std::size_t hi = ladder.size() - 1;
    if (cover_feasible(ladder[lo], nothing_forced, nothing_excluded)) {
      hi = lo;
    } else {
      while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (cover_feasible(ladder[mid], nothing_forced, nothing_excluded)) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
    }
    if (!cover_feasible(ladder[hi], nothing_forced, nothing_excluded)) {
      throw InternalError("binary search invariant violated: upper bound infeasible");
    }
    if (hi > 0 && cover_feasible(ladder[hi - 1], nothing_forced, nothing_excluded)) {
      throw InternalError("binary search invariant violated: feasibility not monotone");
    }
    optimum = ladder[hi];
  }

  // Lexicographically smallest optimal slate: commit indices left to right,
  // keeping an index exactly when a feasible completion still exists.
  std::vector<std::int32_t> forced;
  std::vector<bool> excluded(n, false);
  for (int i = 0; i < n && static_cast<int>(forced.size()) < k; ++i) {
    forced.push_back(i);
    const bool ok = measure == MeasureId::uniformity ? dispersion_feasible(optimum, forced, excluded)
                                                     : cover_feasible(optimum, forced, excluded);
    if (!ok) {
      forced.pop_back();
      excluded[i] = true;
    }
  }
  if (static_cast<int>(forced.size()) != k) {
    throw InternalError("threshold reconstruction failed to assemble a slate");
  }

  result.optimal_value = optimum;
  result.slate = Slate{std::move(forced)};
  result.stats.nodes = budget.used(limits.node_budget);
  detail::check_result_consistency(instance, measure, result);
  return result;
}

}  // namespace pruning
