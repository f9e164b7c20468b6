#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace vtype {

/// Shortest decimal that round-trips to the same double (never more than 17
/// significant digits), `.` separator, independent of the global locale.
/// Non-finite values format as the empty string: gaps, never NaN.
std::string format_number(double value);

/// Parses a whole field as a double; rejects trailing garbage, inf and nan.
std::optional<double> parse_number(std::string_view text);

/// Empty field, number, or bare text label. Labels may not contain `,` or
/// line breaks; there is no quoting.
using CsvCell = std::variant<std::monostate, double, std::string>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;
};

void write_csv(std::ostream& out, const CsvTable& table);
std::string to_csv_string(const CsvTable& table);
CsvTable read_csv(std::istream& in);

/// Gap-aware convenience for optional values.
inline CsvCell cell(std::optional<double> v) {
  return v ? CsvCell{*v} : CsvCell{};
}

}  // namespace vtype
