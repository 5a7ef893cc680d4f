// Shared helpers for the test suites: compact instance construction and
// independent oracles. Oracles are deliberately naive re-implementations,
// kept apart from the library code paths they check.

#ifndef PRUNING_TEST_SUPPORT_HPP
#define PRUNING_TEST_SUPPORT_HPP

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "pruning/generate.hpp"
#include "pruning/measures.hpp"
#include "pruning/types.hpp"

namespace testsupport {

using namespace pruning;

inline Instance ints(std::vector<std::vector<Coord>> rows, Coord scale = 1,
                     std::string name = "test") {
  std::vector<Alternative> points;
  for (auto& row : rows) points.push_back(Alternative{std::move(row)});
  return make_instance(std::move(name), std::move(points), {}, scale, ValidationMode::strict);
}

inline Alternative alt(std::vector<Coord> coords) { return Alternative{std::move(coords)}; }

// ---- independent oracles -------------------------------------------------

inline Dist oracle_manhattan(const Alternative& x, const Alternative& y) {
  Dist sum = 0;
  for (int i = 0; i < x.dimension(); ++i) {
    const Coord diff = x.coords[i] - y.coords[i];
    sum += diff < 0 ? -diff : diff;
  }
  return sum;
}

inline Dist oracle_directed(const Alternative& x, const Alternative& y) {
  Dist sum = 0;
  for (int i = 0; i < x.dimension(); ++i) {
    const Coord diff = x.coords[i] - y.coords[i];
    if (diff > 0) sum += diff;
  }
  return sum;
}

// Pairwise-check Pareto filter.
inline std::vector<Alternative> oracle_pareto(const std::vector<Alternative>& points) {
  std::vector<Alternative> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      bool ge = true, gt = false;
      for (int c = 0; c < points[i].dimension(); ++c) {
        if (points[j].coords[c] < points[i].coords[c]) ge = false;
        if (points[j].coords[c] > points[i].coords[c]) gt = true;
      }
      if (ge && gt) dominated = true;
    }
    if (!dominated) out.push_back(points[i]);
  }
  return out;
}

inline Dist oracle_uniformity(const Instance& inst, const Slate& slate) {
  Dist best = std::numeric_limits<Dist>::max();
  for (std::size_t i = 0; i < slate.members.size(); ++i) {
    for (std::size_t j = i + 1; j < slate.members.size(); ++j) {
      best = std::min(best,
                      oracle_manhattan(inst.alt(slate.members[i]), inst.alt(slate.members[j])));
    }
  }
  return best;
}

template <typename Norm>
Dist oracle_cover(const Instance& inst, const Slate& slate, Norm norm) {
  Dist worst = 0;
  for (int a = 0; a < inst.n(); ++a) {
    Dist nearest = std::numeric_limits<Dist>::max();
    for (std::int32_t s : slate.members) nearest = std::min(nearest, norm(inst.alt(a), inst.alt(s)));
    worst = std::max(worst, nearest);
  }
  return worst;
}

// Exhaustive slate enumeration returning the optimal measure value.
inline Dist oracle_best_value(const Instance& inst, MeasureId measure, int k) {
  std::vector<std::int32_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  const bool maximize = measure == MeasureId::uniformity;
  Dist best = maximize ? std::numeric_limits<Dist>::min() : std::numeric_limits<Dist>::max();
  while (true) {
    Slate slate{idx};
    Dist value;
    switch (measure) {
      case MeasureId::uniformity: value = oracle_uniformity(inst, slate); break;
      case MeasureId::coverage: value = oracle_cover(inst, slate, oracle_manhattan); break;
      default: value = oracle_cover(inst, slate, oracle_directed); break;
    }
    best = maximize ? std::max(best, value) : std::min(best, value);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == inst.n() - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return best;
}

// Inclusion-exclusion hypervolume for small slates (independent of the
// slicing implementation).
inline BigInt oracle_hypervolume_ie(const Instance& inst, const Slate& slate,
                                    const Alternative& ref) {
  const int k = slate.k();
  BigInt total = 0;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<Coord> corner(inst.d(), std::numeric_limits<Coord>::max());
    int bits = 0;
    for (int b = 0; b < k; ++b) {
      if (mask & (1u << b)) {
        ++bits;
        for (int c = 0; c < inst.d(); ++c) {
          corner[c] = std::min(corner[c], inst.alt(slate.members[b]).coords[c]);
        }
      }
    }
    BigInt volume = 1;
    for (int c = 0; c < inst.d(); ++c) {
      volume *= BigInt(std::max<Coord>(corner[c] - ref.coords[c], 0));
    }
    total += (bits % 2 == 1) ? volume : -volume;
  }
  return total;
}

}  // namespace testsupport

#endif  // PRUNING_TEST_SUPPORT_HPP
