#include "stm/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include "stm/error.hpp"

namespace stm {

int CsvTable::col(const std::string& name) const {
  auto it = std::find(header.begin(), header.end(), name);
  return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

int CsvTable::require_col(const std::string& name) const {
  int c = col(name);
  if (c < 0) throw Error(path + ": missing required column '" + name + "'");
  return c;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  cells.push_back(cur);
  return cells;
}

}  // namespace

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  CsvTable t;
  t.path = path;
  std::string line;
  if (!std::getline(in, line)) throw Error(path + ": empty file (header row is mandatory)");
  t.header = split_line(line);
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto cells = split_line(line);
    if (cells.size() != t.header.size())
      throw Error(path + ": row " + std::to_string(t.rows.size() + 2) + " has " +
                  std::to_string(cells.size()) + " cells, header has " +
                  std::to_string(t.header.size()));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

double parse_double(const std::string& cell, const std::string& context) {
  char* end = nullptr;
  double v = std::strtod(cell.c_str(), &end);
  if (end == cell.c_str() || *end != '\0')
    throw Error(context + ": cannot parse '" + cell + "' as a number");
  return v;
}

int parse_int(const std::string& cell, const std::string& context) {
  char* end = nullptr;
  long v = std::strtol(cell.c_str(), &end, 10);
  if (end == cell.c_str() || *end != '\0')
    throw Error(context + ": cannot parse '" + cell + "' as an integer");
  return static_cast<int>(v);
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : path_(path), out_(path), width_(header.size()) {
  if (!out_) throw Error("cannot open file for writing: " + path);
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_)
    throw Error(path_ + ": row width " + std::to_string(cells.size()) +
                " does not match header width " + std::to_string(width_));
  for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
  out_ << "\n";
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  if (std::strtod(buf, nullptr) != v) std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_int(long v) { return std::to_string(v); }

}  // namespace stm
