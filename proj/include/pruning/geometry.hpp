/**
 * @file geometry.hpp
 * @brief Dominance relation, Pareto filtering, and the two norms.
 */

#ifndef PRUNING_GEOMETRY_HPP
#define PRUNING_GEOMETRY_HPP

#include <vector>

#include "pruning/types.hpp"

namespace pruning {

/// True iff `winner` dominates `loser`: winner_i >= loser_i in every
/// objective with strict inequality in at least one.
bool dominates(const Alternative& winner, const Alternative& loser);

/// True iff winner_i >= loser_i in every objective (equality allowed).
bool weakly_dominates(const Alternative& winner, const Alternative& loser);

/// Returns exactly the points not dominated by any other input point,
/// preserving input order. Duplicates are kept (they do not dominate
/// each other).
std::vector<Alternative> pareto_filter(const std::vector<Alternative>& points);

/// Manhattan (l1) distance: sum_i |x_i - y_i|. Symmetric, zero iff x == y.
Dist manhattan(const Alternative& x, const Alternative& y);

/// Directed distance: sum_i max(x_i - y_i, 0). Not symmetric;
/// directed(x, y) + directed(y, x) == manhattan(x, y).
Dist directed(const Alternative& x, const Alternative& y);

}  // namespace pruning

#endif  // PRUNING_GEOMETRY_HPP
