#include "pruning/generate.hpp"

#include <algorithm>
#include <set>

#include "pruning/embeddings.hpp"
#include "pruning/geometry.hpp"

namespace pruning {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InputError("Rng::below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % n;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InputError("Rng::range with lo > hi");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Instance random_pareto_2d(Rng& rng, int n, Coord magnitude, std::string name) {
  // Distinct x ascending, distinct y descending: a staircase antichain.
  std::set<Coord> xs;
  std::set<Coord> ys;
  while (static_cast<int>(xs.size()) < n) xs.insert(rng.range(-magnitude, magnitude));
  while (static_cast<int>(ys.size()) < n) ys.insert(rng.range(-magnitude, magnitude));
  std::vector<Coord> x(xs.begin(), xs.end());
  std::vector<Coord> y(ys.begin(), ys.end());
  std::vector<Alternative> points;
  points.reserve(n);
  for (int i = 0; i < n; ++i) points.push_back(Alternative{{x[i], y[n - 1 - i]}});
  return make_instance(std::move(name), std::move(points), ValidationMode::strict);
}

namespace {

PointSet random_planar(Rng& rng, int n, Coord magnitude) {
  std::set<std::pair<Coord, Coord>> seen;
  while (static_cast<int>(seen.size()) < n) {
    seen.emplace(rng.range(-magnitude, magnitude), rng.range(-magnitude, magnitude));
  }
  PointSet set;
  for (const auto& [a, b] : seen) set.points.push_back(Alternative{{a, b}});
  return set;
}

}  // namespace

Instance random_lift_4d(Rng& rng, int n, Coord magnitude, std::string name) {
  return antisymmetric_lift(random_planar(rng, n, magnitude), std::move(name));
}

Instance random_plane_3d(Rng& rng, int n, Coord magnitude, std::string name) {
  return hyperplane_embed(random_planar(rng, n, std::min<Coord>(magnitude, 1'000'000)),
                          Rational(1, 8), std::move(name));
}

Instance random_approval(Rng& rng, int d, std::string name) {
  // d == 1 admits no antichain of two points.
  if (d < 2 || d > 16) throw InputError("random_approval supports 2 <= d <= 16");
  while (true) {
    std::set<std::vector<Coord>> chosen;
    const int attempts = 2 + static_cast<int>(rng.below(1u << d));
    for (int a = 0; a < attempts; ++a) {
      std::vector<Coord> v(d);
      for (int i = 0; i < d; ++i) v[i] = static_cast<Coord>(rng.below(2));
      chosen.insert(std::move(v));
    }
    std::vector<Alternative> points;
    for (const auto& v : chosen) points.push_back(Alternative{v});
    points = pareto_filter(points);
    if (points.size() < 2) continue;
    return make_instance(std::move(name), std::move(points),
                         std::vector<ObjectiveKind>(d, ObjectiveKind::approval), 1,
                         ValidationMode::strict);
  }
}

namespace {

// Planar staircase of n-1 points inside [0, m] x [1, spread+1].
std::vector<Alternative> staircase(Rng& rng, int count, Coord x_hi, Coord y_lo, Coord y_hi) {
  std::set<Coord> xs;
  std::set<Coord> ys;
  while (static_cast<int>(xs.size()) < count) xs.insert(rng.range(0, x_hi));
  while (static_cast<int>(ys.size()) < count) ys.insert(rng.range(y_lo, y_hi));
  std::vector<Coord> x(xs.begin(), xs.end());
  std::vector<Coord> y(ys.begin(), ys.end());
  std::vector<Alternative> points;
  for (int i = 0; i < count; ++i) points.push_back(Alternative{{x[i], y[count - 1 - i]}});
  return points;
}

}  // namespace

Instance random_with_standout(Rng& rng, int n, bool three_objectives, std::string name) {
  // Cluster in [0, m] x [1, c]; champion at (x_far, 0). Its weakest lead is
  // at least x_far - m, the strongest lead against it is at most c (plus
  // one in the three-objective variant, whose cluster sits at height 1).
  // The antisymmetric lift is useless here: it symmetrizes directed
  // distances, so no lifted instance has a standout.
  const Coord m = 20;
  const Coord c = 10;
  std::vector<Alternative> points = staircase(rng, n - 1, m, 1, c);
  const Coord x_far = m + c + 2 + rng.range(0, 10);
  if (three_objectives) {
    for (Alternative& a : points) a.coords.push_back(1);
    points.push_back(Alternative{{x_far, 0, 0}});
  } else {
    points.push_back(Alternative{{x_far, 0}});
  }
  return make_instance(std::move(name), std::move(points), ValidationMode::strict);
}

Instance random_with_outlier(Rng& rng, int n, bool lifted, std::string name) {
  // Cluster staircase in [0, c] x [h, h+c] has Manhattan diameter at most
  // 2c; the far point at (x_far, 0) keeps distance > 2c to all of it.
  const Coord c = 8;
  const Coord h = 1 + rng.range(0, 5);
  std::vector<Alternative> points = staircase(rng, n - 1, c, h, h + c);
  const Coord x_far = 3 * c + 1 + rng.range(0, 10);
  points.push_back(Alternative{{x_far, 0}});
  if (!lifted) {
    return make_instance(std::move(name), std::move(points), ValidationMode::strict);
  }
  return antisymmetric_lift(PointSet{std::move(points), 1}, std::move(name));
}

}  // namespace pruning
