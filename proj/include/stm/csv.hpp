#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace stm {

/// In-memory CSV with a mandatory header row. Cells are raw strings; empty
/// cells are allowed (used by some formats as explicit sentinels).
struct CsvTable {
  std::string path;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int col(const std::string& name) const;
  int require_col(const std::string& name) const;  // throws naming file and column
};

CsvTable read_csv(const std::string& path);

double parse_double(const std::string& cell, const std::string& context);
int parse_int(const std::string& cell, const std::string& context);

class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  void row(const std::vector<std::string>& cells);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream out_;
  std::size_t width_;
};

/// Shortest decimal form that parses back to the same double.
std::string fmt_double(double v);
std::string fmt_int(long v);

}  // namespace stm
