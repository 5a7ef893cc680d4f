/**
 * @file types.hpp
 * @brief Core domain types for Pareto pruning: alternatives, instances,
 *        slates, and the exact numeric types shared across the library.
 *
 * All coordinates are stored as integers in per-instance scaled units:
 * an instance carries a positive integer `scale`, and the value of
 * coordinate c in original units is the rational c / scale. Distances and
 * measure values computed from one instance are therefore exact integers
 * (or exact rationals) in the same scaled units.
 */

#ifndef PRUNING_TYPES_HPP
#define PRUNING_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pruning {

/// Objective value in scaled integer units.
using Coord = std::int64_t;

/// An l1 or directed distance in scaled integer units.
using Dist = std::int64_t;

/// Arbitrary-precision integer (hypervolume values in scaled-unit^d).
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational (epsilons, normalized scores, reporting).
using Rational = boost::multiprecision::cpp_rational;

/// Largest coordinate magnitude accepted after scaling. Keeps distance
/// sums comfortably inside 64 bits for any realistic dimension.
inline constexpr Coord kCoordCap = 1'000'000'000'000LL;

/// Malformed input: files, dimensions, flag combinations, out-of-range data.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was invoked outside its contract (e.g. uniformity with k < 2).
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

/// A node or time budget was exhausted before an exact answer was proven.
/// Never carries a partial result; an incomplete solve is an error.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency assertion failed (library bug or corrupted input).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

enum class ObjectiveKind { cardinal, ordinal, approval };

std::string to_string(ObjectiveKind kind);
ObjectiveKind objective_kind_from_string(const std::string& token);

/// A point in R^d: the image f(x) of a Pareto optimal solution.
struct Alternative {
  std::vector<Coord> coords;

  int dimension() const { return static_cast<int>(coords.size()); }
  bool operator==(const Alternative& other) const = default;
  bool operator<(const Alternative& other) const { return coords < other.coords; }
};

/// A size-k subset of an instance's alternatives, stored as sorted
/// distinct indices into Instance::alternatives.
struct Slate {
  std::vector<std::int32_t> members;

  int k() const { return static_cast<int>(members.size()); }
  bool contains(std::int32_t index) const;
  bool operator==(const Slate& other) const = default;
  bool operator<(const Slate& other) const { return members < other.members; }
};

/// A validated set of mutually non-dominating alternatives.
///
/// Invariants (enforced by make_instance):
///  - all alternatives share one dimension d >= 1,
///  - no alternative dominates another, no two are identical,
///  - alternatives are sorted lexicographically by coordinates; slate
///    indices always refer to this canonical order,
///  - approval objectives take values in {0,1}, ordinal objectives are a
///    permutation of 1..n (both in original units),
///  - scale is minimal (gcd-reduced) and >= 1.
struct Instance {
  std::string name;
  std::vector<Alternative> alternatives;
  std::vector<ObjectiveKind> kinds;
  Coord scale = 1;

  int n() const { return static_cast<int>(alternatives.size()); }
  int d() const { return alternatives.empty() ? 0 : alternatives.front().dimension(); }
  const Alternative& alt(int index) const { return alternatives.at(index); }

  /// Coordinate in original (unscaled) units.
  Rational value_at(int index, int objective) const;

  bool all_approval() const;
};

enum class ValidationMode { strict, lenient };

/// What ingestion/validation changed or observed about the raw point list.
struct ValidationReport {
  int duplicates_removed = 0;
  int dominated_removed = 0;
  std::vector<std::string> warnings;
};

/// Validates, deduplicates, canonicalizes, and normalizes a raw point list
/// into an Instance.
///
/// In strict mode a dominated point is an InputError naming the offending
/// pair; in lenient mode dominated points are dropped with a warning.
/// Duplicates are dropped with a warning in both modes.
Instance make_instance(std::string name, std::vector<Alternative> alternatives,
                       std::vector<ObjectiveKind> kinds, Coord scale,
                       ValidationMode mode, ValidationReport* report = nullptr);

/// Shorthand: all-cardinal kinds, scale 1.
Instance make_instance(std::string name, std::vector<Alternative> alternatives,
                       ValidationMode mode = ValidationMode::strict,
                       ValidationReport* report = nullptr);

/// Throws InputError unless `slate` is sorted, distinct, and in range.
void validate_slate(const Instance& instance, const Slate& slate);

/// True iff alternative i of a and j of b denote the same point in original
/// units (exact rational comparison across possibly different scales).
bool same_point(const Instance& a, int i, const Instance& b, int j);

/// Index of `point` (given in `scale` units) within `instance`, or -1.
int find_point(const Instance& instance, const Alternative& point, Coord scale);

}  // namespace pruning

#endif  // PRUNING_TYPES_HPP
