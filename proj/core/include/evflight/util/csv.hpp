#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace evflight {

// Minimal CSV writer: fixed column set, one header row.
class CsvWriter {
public:
  CsvWriter(const std::string& path, const std::vector<std::string>& columns)
      : out_(path), ncols_(columns.size()) {
    if (!out_) throw std::runtime_error("cannot write " + path);
    for (size_t i = 0; i < columns.size(); ++i)
      out_ << columns[i] << (i + 1 < columns.size() ? "," : "\n");
  }

  void row(const std::vector<double>& values) {
    if (values.size() != ncols_) throw std::runtime_error("csv row width mismatch");
    char buf[32];
    for (size_t i = 0; i < values.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.9g", values[i]);
      out_ << buf << (i + 1 < values.size() ? "," : "\n");
    }
  }

  // Mixed row for logs carrying a string column.
  void raw_row(const std::string& line) { out_ << line << "\n"; }

private:
  std::ofstream out_;
  size_t ncols_;
};

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  int col(const std::string& name) const {
    for (size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == name) return int(i);
    throw std::runtime_error("csv column not found: " + name);
  }

  std::vector<double> column(const std::string& name) const {
    int c = col(name);
    std::vector<double> v;
    v.reserve(rows.size());
    for (const auto& r : rows) v.push_back(r[c]);
    return v;
  }
};

inline CsvTable csv_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path);
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) t.columns.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    row.reserve(t.columns.size());
    std::stringstream ls(line);
    while (std::getline(ls, cell, ','))
      row.push_back(cell.empty() ? 0.0 : std::strtod(cell.c_str(), nullptr));
    if (row.size() != t.columns.size())
      throw std::runtime_error("csv row width mismatch in " + path);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace evflight
