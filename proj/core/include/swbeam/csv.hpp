#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace swbeam {

// Full round-trip precision (17 significant digits); used for every CSV the
// acceptance tooling diffs byte-wise.
std::string format_full(double v);

// 6 significant digits; plot-data files only.
std::string format_plot(double v);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  // Index of a named column; throws naming the column when absent.
  std::size_t column_index(const std::string& name) const;
};

CsvTable read_csv(const std::filesystem::path& path);

// Writes text to a file, throwing on I/O failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace swbeam
