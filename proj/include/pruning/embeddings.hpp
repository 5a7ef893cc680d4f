/**
 * @file embeddings.hpp
 * @brief Distance-preserving transformations between point sets, exposed as
 *        instance generators with machine-checkable preservation properties.
 *
 * The three instance-producing embeddings (triangular grid, hyperplane,
 * antisymmetric lift) always output mutually non-dominating points, which
 * makes them convenient generators for 3- and 4-objective solver inputs.
 */

#ifndef PRUNING_EMBEDDINGS_HPP
#define PRUNING_EMBEDDINGS_HPP

#include <cstdint>
#include <vector>

#include "pruning/types.hpp"

namespace pruning {

/// A raw, unvalidated planar point set (embedding inputs need not be
/// mutually non-dominating).
struct PointSet {
  std::vector<Alternative> points;
  Coord scale = 1;
};

struct GridPoint {
  std::int64_t i = 0;
  std::int64_t j = 0;
  bool operator==(const GridPoint&) const = default;
};

/// Shortest-path distance between two vertices of the triangular grid:
/// |di| + |dj| when the coordinate differences share a sign (zero counts
/// as either), max(|di|, |dj|) otherwise.
Dist trigrid_distance(GridPoint v, GridPoint w);

/// i*(1,0,-1) + j*(0,1,-1) = (i, j, -i-j). The directed distance between
/// two images equals the grid distance between the originals.
Alternative trigrid_embed(GridPoint v);

/// Embeds a list of grid vertices and validates the result as an Instance.
Instance trigrid_instance(const std::vector<GridPoint>& vertices, std::string name);

/// Maps (x1, x2) to x1*(-eps, 0, 1) + x2*(-eps, 1, 0) on the plane
/// orthogonal to (1, eps, eps), where no point can dominate another.
/// Requires integer input coordinates (scale 1) and eps > 0.
Instance hyperplane_embed(const PointSet& points, const Rational& eps, std::string name);

struct ShearResult {
  std::vector<Alternative> points;  ///< (t*x1 + x2, x1 + t*x2), scale 1
  std::int64_t t = 0;
  std::int64_t delta_prime = 0;
};

/// Shear transform with t = max(n+1, 2*delta+2) and delta' = (t+1)*delta:
/// ||x - y|| <= delta iff ||f(x) - f(y)|| <= delta', and no two distinct
/// outputs share a coordinate. Inputs must lie in [1..n] x [1..n].
ShearResult shear_map(const PointSet& points, std::int64_t n, std::int64_t delta);

/// (x1, x2) -> (x1/2, -x1/2, x2/2, -x2/2): preserves Manhattan distances,
/// halves directed distances, and turns any planar point set into a valid
/// 4-objective Pareto instance.
Instance antisymmetric_lift(const PointSet& points, std::string name);

}  // namespace pruning

#endif  // PRUNING_EMBEDDINGS_HPP
