#include "pruning/geometry.hpp"

#include <cstdlib>

namespace pruning {

namespace {

void check_same_dimension(const Alternative& x, const Alternative& y) {
  if (x.dimension() != y.dimension()) {
    throw InputError("dimension mismatch: " + std::to_string(x.dimension()) + " vs " +
                     std::to_string(y.dimension()));
  }
}

}  // namespace

bool weakly_dominates(const Alternative& winner, const Alternative& loser) {
  check_same_dimension(winner, loser);
  for (int i = 0; i < winner.dimension(); ++i) {
    if (winner.coords[i] < loser.coords[i]) return false;
  }
  return true;
}

bool dominates(const Alternative& winner, const Alternative& loser) {
  check_same_dimension(winner, loser);
  bool strict = false;
  for (int i = 0; i < winner.dimension(); ++i) {
    if (winner.coords[i] < loser.coords[i]) return false;
    if (winner.coords[i] > loser.coords[i]) strict = true;
  }
  return strict;
}

std::vector<Alternative> pareto_filter(const std::vector<Alternative>& points) {
  std::vector<Alternative> survivors;
  survivors.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool is_dominated = false;
    for (std::size_t j = 0; j < points.size() && !is_dominated; ++j) {
      if (i != j) is_dominated = dominates(points[j], points[i]);
    }
    if (!is_dominated) survivors.push_back(points[i]);
  }
  return survivors;
}

Dist manhattan(const Alternative& x, const Alternative& y) {
  check_same_dimension(x, y);
  Dist sum = 0;
  for (int i = 0; i < x.dimension(); ++i) {
    sum += std::abs(x.coords[i] - y.coords[i]);
  }
  return sum;
}

Dist directed(const Alternative& x, const Alternative& y) {
  check_same_dimension(x, y);
  Dist sum = 0;
  for (int i = 0; i < x.dimension(); ++i) {
    const Coord diff = x.coords[i] - y.coords[i];
    if (diff > 0) sum += diff;
  }
  return sum;
}

}  // namespace pruning
