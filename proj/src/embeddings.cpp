#include "pruning/embeddings.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "pruning/geometry.hpp"

namespace pruning {

Dist trigrid_distance(GridPoint v, GridPoint w) {
  const std::int64_t di = v.i - w.i;
  const std::int64_t dj = v.j - w.j;
  if ((di >= 0) == (dj >= 0) || di == 0 || dj == 0) {
    return std::abs(di) + std::abs(dj);
  }
  return std::max(std::abs(di), std::abs(dj));
}

Alternative trigrid_embed(GridPoint v) {
  return Alternative{{v.i, v.j, -v.i - v.j}};
}

Instance trigrid_instance(const std::vector<GridPoint>& vertices, std::string name) {
  std::vector<Alternative> points;
  points.reserve(vertices.size());
  for (GridPoint v : vertices) points.push_back(trigrid_embed(v));
  // Images lie on the plane x+y+z = 0, so mutual non-domination holds.
  return make_instance(std::move(name), std::move(points), ValidationMode::strict);
}

Instance hyperplane_embed(const PointSet& points, const Rational& eps, std::string name) {
  if (eps <= 0) throw InputError("hyperplane embedding requires eps > 0");
  if (points.scale != 1) throw InputError("hyperplane embedding requires integer inputs");
  if (numerator(eps) > 1'000'000 || denominator(eps) > 1'000'000) {
    throw InputError("hyperplane eps numerator/denominator limited to 10^6");
  }
  const Coord p = static_cast<Coord>(numerator(eps));
  const Coord q = static_cast<Coord>(denominator(eps));
  for (const Alternative& a : points.points) {
    for (Coord c : a.coords) {
      if (std::abs(c) > 1'000'000) {
        throw InputError("hyperplane embedding input coordinates limited to 10^6");
      }
    }
  }

  std::vector<Alternative> mapped;
  mapped.reserve(points.points.size());
  for (const Alternative& a : points.points) {
    if (a.dimension() != 2) throw InputError("hyperplane embedding expects 2-D points");
    const Coord x1 = a.coords[0];
    const Coord x2 = a.coords[1];
    // x1*(-eps, 0, 1) + x2*(-eps, 1, 0), multiplied through by q.
    mapped.push_back(Alternative{{-p * (x1 + x2), q * x2, q * x1}});
  }
  return make_instance(std::move(name), std::move(mapped), {}, q, ValidationMode::strict);
}

ShearResult shear_map(const PointSet& points, std::int64_t n, std::int64_t delta) {
  if (n < 1) throw InputError("shear map requires n >= 1");
  if (delta < 1) throw InputError("shear map requires delta >= 1");
  if (points.scale != 1) throw InputError("shear map requires integer inputs");

  ShearResult result;
  result.t = std::max(n + 1, 2 * delta + 2);
  result.delta_prime = (result.t + 1) * delta;
  result.points.reserve(points.points.size());
  for (const Alternative& a : points.points) {
    if (a.dimension() != 2) throw InputError("shear map expects 2-D points");
    const Coord x1 = a.coords[0];
    const Coord x2 = a.coords[1];
    if (x1 < 1 || x1 > n || x2 < 1 || x2 > n) {
      throw InputError("shear map input coordinate outside 1.." + std::to_string(n));
    }
    result.points.push_back(Alternative{{result.t * x1 + x2, x1 + result.t * x2}});
  }
  return result;
}

Instance antisymmetric_lift(const PointSet& points, std::string name) {
  std::vector<Alternative> lifted;
  lifted.reserve(points.points.size());
  for (const Alternative& a : points.points) {
    if (a.dimension() != 2) throw InputError("antisymmetric lift expects 2-D points");
    const Coord x1 = a.coords[0];
    const Coord x2 = a.coords[1];
    lifted.push_back(Alternative{{x1, -x1, x2, -x2}});
  }
  if (points.scale > kCoordCap / 2) throw InputError("lift scale overflow");
  // Halving every coordinate is folded into the doubled scale.
  return make_instance(std::move(name), std::move(lifted), {}, points.scale * 2,
                       ValidationMode::strict);
}

}  // namespace pruning
