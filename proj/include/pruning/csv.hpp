/**
 * @file csv.hpp
 * @brief Instance CSV ingestion and emission.
 *
 * Format: header `o1,...,od`, one row per alternative, decimal values,
 * UTF-8 with LF line endings. Values are parsed exactly: decimals are
 * scaled to integers over the instance-wide lowest common denominator, so
 * every later measure value is exact.
 */

#ifndef PRUNING_CSV_HPP
#define PRUNING_CSV_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "pruning/embeddings.hpp"
#include "pruning/types.hpp"

namespace pruning {

struct IngestResult {
  Instance instance;
  ValidationReport report;
};

/// Parses and validates an instance. Objective kinds are inferred per
/// column: approval when every value is 0 or 1, ordinal when the column is
/// a permutation of 1..n, cardinal otherwise. Parse errors carry the line
/// number; in strict mode a dominated row is an error naming the pair.
IngestResult ingest_csv(const std::filesystem::path& path, ValidationMode mode,
                        std::string name = "");
IngestResult ingest_csv_stream(std::istream& in, ValidationMode mode, std::string name);

/// Raw variant for embedding inputs: same format, deduplicated, but not
/// Pareto-validated (embedding inputs need not be antichains).
PointSet ingest_points_csv(const std::filesystem::path& path);
PointSet ingest_points_csv_stream(std::istream& in, const std::string& name);

void emit_csv(const Instance& instance, std::ostream& out);
void emit_points_csv(const PointSet& points, std::ostream& out);

/// Exact decimal rendering of value/scale. Requires scale to divide a
/// power of ten (always true for ingested instances).
std::string decimal_string(Coord value, Coord scale);

/// Reads a slate as whitespace- or comma-separated 0-based indices into
/// the validated instance; `#` starts a comment. Validates against the
/// instance.
Slate read_slate_file(const std::filesystem::path& path, const Instance& instance);

}  // namespace pruning

#endif  // PRUNING_CSV_HPP
