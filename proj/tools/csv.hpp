#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ringdyn::cli {

/// Fixed-format float for CSV cells: 17 significant digits, enough to
/// round-trip any double and keep output byte-deterministic.
std::string format_double(double value);

/// CSV emitter: '#'-prefixed comment lines for provenance, one header
/// row naming the columns, then data rows. Lines end with '\n'.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void comment(const std::string& text);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& out_;
};

}  // namespace ringdyn::cli
