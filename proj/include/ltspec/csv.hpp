#pragma once

#include <string>
#include <vector>

namespace ltspec {

/// Shortest round-trip decimal form of a double, deterministic across runs
/// and thread counts ("%.17g" trimmed).
std::string format_double(double v);

/// Minimal RFC-4180 writer: comma separated, CRLF-free (LF line ends),
/// fields quoted only when they contain a comma, quote or newline.
class CsvWriter {
 public:
  void row(const std::vector<std::string>& fields);
  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

/// Split one CSV line honoring RFC-4180 quoting.
std::vector<std::string> csv_split(const std::string& line);

}  // namespace ltspec
