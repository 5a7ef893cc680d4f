#include "pruning/measures.hpp"

#include <algorithm>
#include <limits>

#include "pruning/geometry.hpp"

namespace pruning {

std::string to_string(MeasureId measure) {
  switch (measure) {
    case MeasureId::uniformity: return "uniformity";
    case MeasureId::coverage: return "coverage";
    case MeasureId::directed_coverage: return "dcoverage";
  }
  throw InternalError("unknown measure");
}

MeasureId measure_from_string(const std::string& token) {
  if (token == "uniformity" || token == "u") return MeasureId::uniformity;
  if (token == "coverage" || token == "c") return MeasureId::coverage;
  if (token == "dcoverage" || token == "directed_coverage" || token == "dc") {
    return MeasureId::directed_coverage;
  }
  throw InputError("unknown measure: " + token);
}

bool higher_is_better(MeasureId measure) { return measure == MeasureId::uniformity; }

Dist uniformity(const Instance& instance, const Slate& slate) {
  validate_slate(instance, slate);
  if (slate.k() < 2) {
    throw ContractError("uniformity is undefined for k < 2 (no pair to compare)");
  }
  Dist best = std::numeric_limits<Dist>::max();
  for (std::size_t i = 0; i < slate.members.size(); ++i) {
    for (std::size_t j = i + 1; j < slate.members.size(); ++j) {
      best = std::min(best, manhattan(instance.alt(slate.members[i]),
                                      instance.alt(slate.members[j])));
    }
  }
  return best;
}

namespace {

template <Dist (*Norm)(const Alternative&, const Alternative&)>
Dist worst_case_cover(const Instance& instance, const Slate& slate) {
  validate_slate(instance, slate);
  Dist worst = 0;
  for (int a = 0; a < instance.n(); ++a) {
    Dist nearest = std::numeric_limits<Dist>::max();
    for (std::int32_t s : slate.members) {
      nearest = std::min(nearest, Norm(instance.alt(a), instance.alt(s)));
    }
    worst = std::max(worst, nearest);
  }
  return worst;
}

}  // namespace

Dist coverage(const Instance& instance, const Slate& slate) {
  return worst_case_cover<manhattan>(instance, slate);
}

Dist directed_coverage(const Instance& instance, const Slate& slate) {
  return worst_case_cover<directed>(instance, slate);
}

Dist evaluate_measure(MeasureId measure, const Instance& instance, const Slate& slate) {
  switch (measure) {
    case MeasureId::uniformity: return uniformity(instance, slate);
    case MeasureId::coverage: return coverage(instance, slate);
    case MeasureId::directed_coverage: return directed_coverage(instance, slate);
  }
  throw InternalError("unknown measure");
}

namespace {

// Volume of the union of boxes [ref, p] restricted to the first `dim`
// coordinates, by slicing along coordinate dim-1. Dominated projections are
// discarded at each level to keep the recursion small.
BigInt union_volume(std::vector<std::vector<Coord>> points, const std::vector<Coord>& ref,
                    int dim) {
  if (points.empty()) return 0;
  if (dim == 1) {
    Coord top = ref[0];
    for (const auto& p : points) top = std::max(top, p[0]);
    return BigInt(top) - ref[0];
  }

  std::vector<Coord> heights;
  heights.reserve(points.size());
  for (const auto& p : points) heights.push_back(p[dim - 1]);
  std::sort(heights.begin(), heights.end());
  heights.erase(std::unique(heights.begin(), heights.end()), heights.end());

  BigInt total = 0;
  Coord prev = ref[dim - 1];
  for (Coord h : heights) {
    std::vector<std::vector<Coord>> alive;
    for (const auto& p : points) {
      if (p[dim - 1] >= h) alive.push_back(std::vector<Coord>(p.begin(), p.begin() + dim - 1));
    }
    // Keep only maximal projections.
    std::vector<std::vector<Coord>> maximal;
    for (std::size_t i = 0; i < alive.size(); ++i) {
      bool covered = false;
      for (std::size_t j = 0; j < alive.size() && !covered; ++j) {
        if (i == j) continue;
        bool le = true;
        bool lt = false;
        for (int c = 0; c < dim - 1 && le; ++c) {
          if (alive[i][c] > alive[j][c]) le = false;
          if (alive[i][c] < alive[j][c]) lt = true;
        }
        covered = le && (lt || j < i);  // drop duplicates once
      }
      if (!covered) maximal.push_back(alive[i]);
    }
    total += BigInt(h - prev) * union_volume(std::move(maximal), ref, dim - 1);
    prev = h;
  }
  return total;
}

}  // namespace

BigInt hypervolume(const Instance& instance, const Slate& slate, const Alternative& ref) {
  validate_slate(instance, slate);
  if (ref.dimension() != instance.d()) {
    throw InputError("reference point dimension does not match the instance");
  }
  std::vector<std::vector<Coord>> points;
  points.reserve(slate.members.size());
  for (std::int32_t s : slate.members) {
    const Alternative& a = instance.alt(s);
    for (int c = 0; c < instance.d(); ++c) {
      if (a.coords[c] <= ref.coords[c]) {
        throw InputError("slate member " + std::to_string(s) +
                         " does not strictly dominate the reference point");
      }
    }
    points.push_back(a.coords);
  }
  return union_volume(std::move(points), ref.coords, instance.d());
}

Alternative default_reference_point(const Instance& instance) {
  Alternative ref = instance.alt(0);
  for (int i = 1; i < instance.n(); ++i) {
    for (int c = 0; c < instance.d(); ++c) {
      ref.coords[c] = std::min(ref.coords[c], instance.alt(i).coords[c]);
    }
  }
  for (Coord& c : ref.coords) c -= 1;
  return ref;
}

Rational avg_sum_objective(const Instance& instance, const Slate& slate) {
  validate_slate(instance, slate);
  BigInt sum = 0;
  for (std::int32_t s : slate.members) {
    for (Coord c : instance.alt(s).coords) sum += c;
  }
  return Rational(sum, slate.k());
}

}  // namespace pruning
