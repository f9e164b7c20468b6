#include "vtype/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vtype/error.hpp"

namespace vtype {

std::string format_number(double value) {
  if (!std::isfinite(value)) return {};
  if (value == 0.0) return "0";  // no "-0"
  char buf[64];
  const auto res = std::abs(value) >= 1e17 ? std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific)
                                           : std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::optional<double> parse_number(std::string_view text) {
  if (text.empty()) return std::nullopt;
  // a leading '+' is accepted
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(value)) return std::nullopt;
  return value;
}

namespace {

void write_cell(std::ostream& out, const CsvCell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    out << format_number(*d);
  } else if (const auto* s = std::get_if<std::string>(&c)) {
    if (s->find_first_of(",\r\n") != std::string::npos) {
      throw Error(Errc::ConfigSyntax, "CSV label contains a separator: " + *s);
    }
    out << *s;
  }
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

void write_csv(std::ostream& out, const CsvTable& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out << ',';
    out << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      write_cell(out, row[i]);
    }
    out << '\n';
  }
}

std::string to_csv_string(const CsvTable& table) {
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) return table;
  for (auto f : split(line)) table.header.emplace_back(f);
  while (std::getline(in, line)) {
    std::vector<CsvCell> row;
    for (auto f : split(line)) {
      if (f.empty()) {
        row.emplace_back();
      } else if (auto v = parse_number(f)) {
        row.emplace_back(*v);
      } else {
        row.emplace_back(std::string(f));
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace vtype
