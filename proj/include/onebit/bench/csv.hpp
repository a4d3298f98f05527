#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace onebit::bench {

/// Shortest decimal that round-trips; locale-independent.
std::string format_double(double value);

/// Header row plus string cells; written with '\n' line ends and no quoting
/// (cells never contain commas).
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> row);
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  std::string str() const;
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace onebit::bench
