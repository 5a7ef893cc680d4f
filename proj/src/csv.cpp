#include "pruning/csv.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <fstream>
#include <set>
#include <sstream>

namespace pruning {

namespace {

struct ParsedNumber {
  std::int64_t mantissa = 0;
  int shift = 0;  // value = mantissa * 10^shift
};

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& message) {
  throw InputError(name + ":" + std::to_string(line) + ": " + message);
}

ParsedNumber parse_decimal(const std::string& token, const std::string& name, int line) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < token.size() && (token[pos] == '+' || token[pos] == '-')) {
    negative = token[pos] == '-';
    ++pos;
  }
  std::int64_t mantissa = 0;
  int digits = 0;
  int frac_digits = 0;
  bool seen_dot = false;
  bool seen_digit = false;
  for (; pos < token.size(); ++pos) {
    const char c = token[pos];
    if (c == '.') {
      if (seen_dot) parse_fail(name, line, "second decimal point in '" + token + "'");
      seen_dot = true;
      continue;
    }
    if (c == 'e' || c == 'E') break;
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      parse_fail(name, line, "unexpected character '" + std::string(1, c) + "' in '" + token + "'");
    }
    seen_digit = true;
    if (++digits > 18) parse_fail(name, line, "more than 18 significant digits in '" + token + "'");
    mantissa = mantissa * 10 + (c - '0');
    if (seen_dot) ++frac_digits;
  }
  if (!seen_digit) parse_fail(name, line, "empty numeric field");

  int exponent = 0;
  if (pos < token.size()) {  // exponent part
    ++pos;
    bool exp_negative = false;
    if (pos < token.size() && (token[pos] == '+' || token[pos] == '-')) {
      exp_negative = token[pos] == '-';
      ++pos;
    }
    if (pos == token.size()) parse_fail(name, line, "empty exponent in '" + token + "'");
    for (; pos < token.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(token[pos]))) {
        parse_fail(name, line, "bad exponent in '" + token + "'");
      }
      exponent = exponent * 10 + (token[pos] - '0');
      if (exponent > 30) parse_fail(name, line, "exponent out of range in '" + token + "'");
    }
    if (exp_negative) exponent = -exponent;
  }
  return ParsedNumber{negative ? -mantissa : mantissa, exponent - frac_digits};
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream stream(line);
  while (std::getline(stream, field, ',')) {
    // trim surrounding whitespace
    const auto first = field.find_first_not_of(" \t\r");
    const auto last = field.find_last_not_of(" \t\r");
    fields.push_back(first == std::string::npos ? "" : field.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

Coord pow10_checked(int exponent, const std::string& name, int line) {
  if (exponent < 0 || exponent > 15) parse_fail(name, line, "value requires scale beyond 10^15");
  Coord value = 1;
  for (int i = 0; i < exponent; ++i) value *= 10;
  return value;
}

struct RawTable {
  std::vector<std::vector<ParsedNumber>> rows;
  std::vector<int> line_numbers;
  int d = 0;
};

RawTable read_table(std::istream& in, const std::string& name) {
  RawTable table;
  std::string line;
  int line_number = 0;

  if (!std::getline(in, line)) throw InputError(name + ": empty file");
  ++line_number;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> header = split_fields(line);
  table.d = static_cast<int>(header.size());
  if (table.d < 1) parse_fail(name, line_number, "empty header");
  for (int j = 0; j < table.d; ++j) {
    if (header[j] != "o" + std::to_string(j + 1)) {
      parse_fail(name, line_number,
                 "expected header field 'o" + std::to_string(j + 1) + "', got '" + header[j] + "'");
    }
  }

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (static_cast<int>(fields.size()) != table.d) {
      parse_fail(name, line_number,
                 "expected " + std::to_string(table.d) + " fields, got " +
                     std::to_string(fields.size()));
    }
    std::vector<ParsedNumber> row;
    row.reserve(table.d);
    for (const std::string& field : fields) row.push_back(parse_decimal(field, name, line_number));
    table.rows.push_back(std::move(row));
    table.line_numbers.push_back(line_number);
  }
  if (table.rows.empty()) throw InputError(name + ": no data rows");
  return table;
}

std::pair<std::vector<Alternative>, Coord> scale_table(const RawTable& table,
                                                       const std::string& name) {
  int max_downshift = 0;
  for (const auto& row : table.rows) {
    for (const ParsedNumber& value : row) {
      max_downshift = std::max(max_downshift, -value.shift);
    }
  }
  const Coord scale = pow10_checked(max_downshift, name, 0);

  std::vector<Alternative> points;
  points.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    Alternative a;
    a.coords.reserve(table.d);
    for (const ParsedNumber& value : table.rows[r]) {
      const int up = value.shift + max_downshift;
      const Coord factor = pow10_checked(up, name, table.line_numbers[r]);
      if (value.mantissa != 0 && std::abs(value.mantissa) > kCoordCap / factor) {
        parse_fail(name, table.line_numbers[r], "value exceeds the coordinate cap after scaling");
      }
      a.coords.push_back(value.mantissa * factor);
    }
    points.push_back(std::move(a));
  }
  return {std::move(points), scale};
}

std::vector<ObjectiveKind> infer_kinds(const Instance& instance) {
  std::vector<ObjectiveKind> kinds(instance.d(), ObjectiveKind::cardinal);
  const int n = instance.n();
  for (int j = 0; j < instance.d(); ++j) {
    bool approval = true;
    for (int i = 0; i < n && approval; ++i) {
      const Coord c = instance.alt(i).coords[j];
      approval = c == 0 || c == instance.scale;
    }
    if (approval) {
      kinds[j] = ObjectiveKind::approval;
      continue;
    }
    if (n <= kCoordCap / instance.scale) {
      std::set<Coord> seen;
      bool ordinal = true;
      for (int i = 0; i < n && ordinal; ++i) {
        const Coord c = instance.alt(i).coords[j];
        ordinal = c >= instance.scale && c <= n * instance.scale && c % instance.scale == 0 &&
                  seen.insert(c).second;
      }
      if (ordinal) kinds[j] = ObjectiveKind::ordinal;
    }
  }
  return kinds;
}

}  // namespace

IngestResult ingest_csv_stream(std::istream& in, ValidationMode mode, std::string name) {
  const RawTable table = read_table(in, name);
  auto [points, scale] = scale_table(table, name);
  IngestResult result;
  result.instance =
      make_instance(name, std::move(points), {}, scale, mode, &result.report);
  result.instance.kinds = infer_kinds(result.instance);
  return result;
}

IngestResult ingest_csv(const std::filesystem::path& path, ValidationMode mode,
                        std::string name) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  if (name.empty()) name = path.stem().string();
  return ingest_csv_stream(in, mode, std::move(name));
}

PointSet ingest_points_csv_stream(std::istream& in, const std::string& name) {
  const RawTable table = read_table(in, name);
  auto [points, scale] = scale_table(table, name);
  PointSet set;
  set.scale = scale;
  std::set<std::vector<Coord>> seen;
  for (Alternative& a : points) {
    if (seen.insert(a.coords).second) set.points.push_back(std::move(a));
  }
  // Minimal-scale normalization, mirroring make_instance.
  Coord g = set.scale;
  for (const Alternative& a : set.points) {
    for (Coord c : a.coords) g = std::gcd(g, c);
  }
  if (g > 1) {
    for (Alternative& a : set.points) {
      for (Coord& c : a.coords) c /= g;
    }
    set.scale /= g;
  }
  return set;
}

PointSet ingest_points_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return ingest_points_csv_stream(in, path.stem().string());
}

std::string decimal_string(Coord value, Coord scale) {
  if (scale < 1) throw InputError("scale must be positive");
  Coord power = 1;
  int exponent = 0;
  while (power % scale != 0) {
    if (exponent >= 18) {
      throw InputError("scale " + std::to_string(scale) +
                       " does not divide a power of ten; cannot emit exact decimals");
    }
    power *= 10;
    ++exponent;
  }
  const Coord factor = power / scale;
  if (value != 0 && std::abs(value) > std::numeric_limits<Coord>::max() / factor) {
    throw InputError("value overflows during decimal rendering");
  }
  Coord numerator = value * factor;

  std::string sign = numerator < 0 ? "-" : "";
  std::string digits = std::to_string(std::abs(numerator));
  if (exponent == 0) return sign + digits;
  if (static_cast<int>(digits.size()) <= exponent) {
    digits.insert(0, exponent + 1 - digits.size(), '0');
  }
  std::string whole = digits.substr(0, digits.size() - exponent);
  std::string frac = digits.substr(digits.size() - exponent);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return frac.empty() ? sign + whole : sign + whole + "." + frac;
}

void emit_csv(const Instance& instance, std::ostream& out) {
  for (int j = 0; j < instance.d(); ++j) out << (j == 0 ? "o" : ",o") << j + 1;
  out << "\n";
  for (int i = 0; i < instance.n(); ++i) {
    for (int j = 0; j < instance.d(); ++j) {
      if (j > 0) out << ",";
      out << decimal_string(instance.alt(i).coords[j], instance.scale);
    }
    out << "\n";
  }
}

void emit_points_csv(const PointSet& points, std::ostream& out) {
  if (points.points.empty()) throw InputError("empty point set");
  const int d = points.points.front().dimension();
  for (int j = 0; j < d; ++j) out << (j == 0 ? "o" : ",o") << j + 1;
  out << "\n";
  for (const Alternative& a : points.points) {
    for (int j = 0; j < d; ++j) {
      if (j > 0) out << ",";
      out << decimal_string(a.coords[j], points.scale);
    }
    out << "\n";
  }
}

Slate read_slate_file(const std::filesystem::path& path, const Instance& instance) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  Slate slate;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line = line.substr(0, comment);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream stream(line);
    std::string token;
    while (stream >> token) {
      try {
        slate.members.push_back(static_cast<std::int32_t>(std::stol(token)));
      } catch (const std::exception&) {
        parse_fail(path.string(), line_number, "expected an index, got '" + token + "'");
      }
    }
  }
  std::sort(slate.members.begin(), slate.members.end());
  validate_slate(instance, slate);
  return slate;
}

}  // namespace pruning
