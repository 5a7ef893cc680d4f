#include "pruning/types.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "pruning/geometry.hpp"

namespace pruning {

std::string to_string(ObjectiveKind kind) {
  switch (kind) {
    case ObjectiveKind::cardinal: return "cardinal";
    case ObjectiveKind::ordinal: return "ordinal";
    case ObjectiveKind::approval: return "approval";
  }
  throw InternalError("unknown objective kind");
}

ObjectiveKind objective_kind_from_string(const std::string& token) {
  if (token == "cardinal") return ObjectiveKind::cardinal;
  if (token == "ordinal") return ObjectiveKind::ordinal;
  if (token == "approval") return ObjectiveKind::approval;
  throw InputError("unknown objective kind: " + token);
}

bool Slate::contains(std::int32_t index) const {
  return std::binary_search(members.begin(), members.end(), index);
}

Rational Instance::value_at(int index, int objective) const {
  return Rational(alternatives.at(index).coords.at(objective), scale);
}

bool Instance::all_approval() const {
  return !kinds.empty() &&
         std::all_of(kinds.begin(), kinds.end(),
                     [](ObjectiveKind k) { return k == ObjectiveKind::approval; });
}

namespace {

std::string point_to_string(const Alternative& a, Coord scale) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (i > 0) out << ", ";
    out << a.coords[i];
  }
  out << ")";
  if (scale != 1) out << "/" << scale;
  return out.str();
}

void check_kind_invariants(const Instance& instance) {
  const int n = instance.n();
  for (int j = 0; j < instance.d(); ++j) {
    switch (instance.kinds[j]) {
      case ObjectiveKind::cardinal:
        break;
      case ObjectiveKind::approval: {
        for (int i = 0; i < n; ++i) {
          const Coord c = instance.alternatives[i].coords[j];
          if (c != 0 && c != instance.scale) {
            throw InputError("objective " + std::to_string(j + 1) +
                             " is approval but has a value other than 0 or 1");
          }
        }
        break;
      }
      case ObjectiveKind::ordinal: {
        std::multiset<Coord> column;
        for (int i = 0; i < n; ++i) column.insert(instance.alternatives[i].coords[j]);
        std::multiset<Coord> expected;
        for (int r = 1; r <= n; ++r) {
          if (r > kCoordCap / instance.scale) {
            throw InputError("ordinal rank overflows the coordinate cap");
          }
          expected.insert(static_cast<Coord>(r) * instance.scale);
        }
        if (column != expected) {
          throw InputError("objective " + std::to_string(j + 1) +
                           " is ordinal but its values are not a permutation of 1.." +
                           std::to_string(n));
        }
        break;
      }
    }
  }
}

}  // namespace

Instance make_instance(std::string name, std::vector<Alternative> alternatives,
                       std::vector<ObjectiveKind> kinds, Coord scale,
                       ValidationMode mode, ValidationReport* report) {
  ValidationReport local;
  ValidationReport& rep = report != nullptr ? *report : local;

  if (alternatives.empty()) throw InputError("instance '" + name + "' has no alternatives");
  if (scale < 1) throw InputError("instance scale must be at least 1");
  const int d = alternatives.front().dimension();
  if (d < 1) throw InputError("alternatives must have dimension >= 1");
  for (const Alternative& a : alternatives) {
    if (a.dimension() != d) {
      throw InputError("instance '" + name + "' mixes dimensions " + std::to_string(d) +
                       " and " + std::to_string(a.dimension()));
    }
    for (Coord c : a.coords) {
      if (c > kCoordCap || c < -kCoordCap) {
        throw InputError("coordinate magnitude exceeds the cap after scaling");
      }
    }
  }
  if (kinds.empty()) kinds.assign(d, ObjectiveKind::cardinal);
  if (static_cast<int>(kinds.size()) != d) {
    throw InputError("objective kind list length does not match dimension");
  }

  // Deduplicate, preserving first occurrences.
  std::vector<Alternative> unique;
  unique.reserve(alternatives.size());
  std::set<std::vector<Coord>> seen;
  for (Alternative& a : alternatives) {
    if (seen.insert(a.coords).second) {
      unique.push_back(std::move(a));
    } else {
      ++rep.duplicates_removed;
    }
  }
  if (rep.duplicates_removed > 0) {
    rep.warnings.push_back("removed " + std::to_string(rep.duplicates_removed) +
                           " duplicate alternative(s)");
  }

  // Dominance: reject (strict) or drop (lenient) dominated points.
  std::vector<bool> dominated(unique.size(), false);
  for (std::size_t i = 0; i < unique.size(); ++i) {
    for (std::size_t j = 0; j < unique.size() && !dominated[i]; ++j) {
      if (i == j) continue;
      if (dominates(unique[j], unique[i])) {
        if (mode == ValidationMode::strict) {
          throw InputError("instance '" + name + "': " + point_to_string(unique[i], scale) +
                           " is dominated by " + point_to_string(unique[j], scale));
        }
        dominated[i] = true;
      }
    }
  }
  std::vector<Alternative> survivors;
  survivors.reserve(unique.size());
  for (std::size_t i = 0; i < unique.size(); ++i) {
    if (dominated[i]) {
      ++rep.dominated_removed;
    } else {
      survivors.push_back(std::move(unique[i]));
    }
  }
  if (rep.dominated_removed > 0) {
    rep.warnings.push_back("filtered " + std::to_string(rep.dominated_removed) +
                           " dominated alternative(s)");
  }
  if (survivors.empty()) throw InputError("instance '" + name + "' is empty after validation");

  std::sort(survivors.begin(), survivors.end());

  // Reduce to the minimal scale representation.
  Coord g = scale;
  for (const Alternative& a : survivors) {
    for (Coord c : a.coords) g = std::gcd(g, c);
  }
  if (g > 1) {
    for (Alternative& a : survivors) {
      for (Coord& c : a.coords) c /= g;
    }
    scale /= g;
  }

  Instance instance{std::move(name), std::move(survivors), std::move(kinds), scale};
  check_kind_invariants(instance);
  return instance;
}

Instance make_instance(std::string name, std::vector<Alternative> alternatives,
                       ValidationMode mode, ValidationReport* report) {
  return make_instance(std::move(name), std::move(alternatives), {}, 1, mode, report);
}

void validate_slate(const Instance& instance, const Slate& slate) {
  if (slate.members.empty()) throw ContractError("slate is empty");
  std::int32_t prev = -1;
  for (std::int32_t m : slate.members) {
    if (m < 0 || m >= instance.n()) {
      throw InputError("slate index " + std::to_string(m) + " out of range for instance '" +
                       instance.name + "' with n = " + std::to_string(instance.n()));
    }
    if (m <= prev) throw InputError("slate indices must be strictly increasing");
    prev = m;
  }
}

bool same_point(const Instance& a, int i, const Instance& b, int j) {
  const Alternative& x = a.alt(i);
  const Alternative& y = b.alt(j);
  if (x.dimension() != y.dimension()) return false;
  if (a.scale == b.scale) return x.coords == y.coords;
  for (int c = 0; c < x.dimension(); ++c) {
    if (BigInt(x.coords[c]) * b.scale != BigInt(y.coords[c]) * a.scale) return false;
  }
  return true;
}

int find_point(const Instance& instance, const Alternative& point, Coord scale) {
  for (int i = 0; i < instance.n(); ++i) {
    const Alternative& a = instance.alt(i);
    if (a.dimension() != point.dimension()) return -1;
    bool equal = true;
    for (int c = 0; c < a.dimension() && equal; ++c) {
      equal = BigInt(a.coords[c]) * scale == BigInt(point.coords[c]) * instance.scale;
    }
    if (equal) return i;
  }
  return -1;
}

}  // namespace pruning
