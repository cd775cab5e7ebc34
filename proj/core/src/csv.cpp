#include "swbeam/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace swbeam {

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_plot(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::size_t CsvTable::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) {
      return i;
    }
  }
  throw std::invalid_argument("results table is missing column '" + name + "'");
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open CSV " + path.string());
  }
  CsvTable table;
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::istringstream row(s);
    std::string cell;
    while (std::getline(row, cell, ',')) {
      cells.push_back(cell);
    }
    if (!s.empty() && s.back() == ',') {
      cells.emplace_back();
    }
    return cells;
  };
  if (!std::getline(in, line)) {
    throw std::runtime_error("empty CSV " + path.string());
  }
  table.columns = split(line);
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    auto cells = split(line);
    if (cells.size() != table.columns.size()) {
      throw std::runtime_error("ragged CSV row in " + path.string());
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << text;
  if (!out) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

}  // namespace swbeam
