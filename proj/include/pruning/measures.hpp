/**
 * @file measures.hpp
 * @brief Slate quality measures: uniformity, coverage, directed coverage,
 *        hypervolume, and average summed objective value.
 *
 * Uniformity, coverage, and directed coverage return exact integers in the
 * instance's scaled units. Hypervolume returns an exact big integer in
 * scaled-unit^d; avg_sum_objective returns an exact rational in scaled units.
 */

#ifndef PRUNING_MEASURES_HPP
#define PRUNING_MEASURES_HPP

#include "pruning/types.hpp"

namespace pruning {

enum class MeasureId { uniformity, coverage, directed_coverage };

std::string to_string(MeasureId measure);
MeasureId measure_from_string(const std::string& token);

/// True for measures where larger values are better (uniformity).
bool higher_is_better(MeasureId measure);

/// Minimum pairwise Manhattan distance within the slate. Requires k >= 2.
Dist uniformity(const Instance& instance, const Slate& slate);

/// max over a in A of min over s in S of manhattan(a, s). Requires k >= 1.
Dist coverage(const Instance& instance, const Slate& slate);

/// max over a in A of min over s in S of directed(a, s). Requires k >= 1.
Dist directed_coverage(const Instance& instance, const Slate& slate);

/// Dispatch to one of the three measures above.
Dist evaluate_measure(MeasureId measure, const Instance& instance, const Slate& slate);

/// Lebesgue volume of the union of boxes [ref, a] over slate members a,
/// computed exactly by recursive slicing. Every member must strictly
/// dominate `ref` in all coordinates (a_i > r_i), else InputError.
/// `ref` is given in the instance's scaled units.
BigInt hypervolume(const Instance& instance, const Slate& slate, const Alternative& ref);

/// Componentwise minimum over the instance minus one scaled unit per
/// coordinate; the harness default reference point.
Alternative default_reference_point(const Instance& instance);

/// (1/k) * sum over slate members of the sum of their coordinates,
/// in scaled units.
Rational avg_sum_objective(const Instance& instance, const Slate& slate);

}  // namespace pruning

#endif  // PRUNING_MEASURES_HPP
