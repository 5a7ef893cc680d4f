/**
 * @file generate.hpp
 * @brief Seed-deterministic random instance generators used by the
 *        randomized axiom checks and the solver stress tests.
 *
 * All randomness goes through Rng, whose output is identical across
 * platforms for a given seed.
 */

#ifndef PRUNING_GENERATE_HPP
#define PRUNING_GENERATE_HPP

#include <cstdint>
#include <random>

#include "pruning/types.hpp"

namespace pruning {

/// mt19937_64 with portable bounded draws (rejection sampling; never
/// std::uniform_int_distribution, whose output is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform draw from [0, n).
  std::uint64_t below(std::uint64_t n);

  /// Uniform draw from [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

  bool chance(double p) { return below(1u << 20) < static_cast<std::uint64_t>(p * (1u << 20)); }

 private:
  std::mt19937_64 engine_;
};

/// Strictly increasing first objective, strictly decreasing second; n
/// points with coordinates of roughly the given magnitude.
Instance random_pareto_2d(Rng& rng, int n, Coord magnitude, std::string name = "rand2d");

/// Antisymmetric lift of n random planar points: a 4-objective instance.
Instance random_lift_4d(Rng& rng, int n, Coord magnitude, std::string name = "randlift4");

/// Hyperplane embedding (eps = 1/8) of n random integer planar points: a
/// 3-objective instance.
Instance random_plane_3d(Rng& rng, int n, Coord magnitude, std::string name = "randplane3");

/// Random antichain in {0,1}^d (approval objectives); at least two points.
Instance random_approval(Rng& rng, int d, std::string name = "randapproval");

/// Instance containing a verified standout alternative; d is 2 or 3.
Instance random_with_standout(Rng& rng, int n, bool three_objectives,
                              std::string name = "randstandout");

/// Instance containing a verified outlier alternative; d is 2 or 4.
Instance random_with_outlier(Rng& rng, int n, bool lifted, std::string name = "randoutlier");

}  // namespace pruning

#endif  // PRUNING_GENERATE_HPP
