#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace viscowave::cli {

/// Comma-separated output with '#' comment lines, a `name[unit]` header and
/// values in %.17e, which round-trips every double.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void comment(const std::string& text);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<double>& values);

  std::size_t columns() const noexcept { return columns_; }

 private:
  std::ostream& out_;
  std::size_t columns_ = 0;
};

std::string format_value(double v);

struct CsvTable {
  std::vector<std::string> comments;  // without the leading '#'
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Parses the format written by CsvWriter. Throws std::runtime_error on
/// malformed input.
CsvTable read_csv(std::istream& in);

}  // namespace viscowave::cli
