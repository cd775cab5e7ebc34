#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "swbeam/csv.hpp"

namespace swbeam {

// Figure ids understood by emit_plotdata.
std::vector<std::string> known_figures();

// Turns a per-replicate results table (the fixed-column sweep CSV) into
// two-column `x y [stddev]` series files named `<figure>_<series>.dat` in
// out_dir:
//   fig2a: L_ratio, C_ratio vs p        fig2b: uni_frac vs p
//   fig3:  apl vs D plus fitted curve   fig5a: L_ratio vs D
//   fig5b: uni_frac vs D
// Throws on unknown figure, empty table, or missing columns (named).
// Returns the written paths.
std::vector<std::filesystem::path> emit_plotdata(
    const CsvTable& results, const std::string& figure,
    const std::filesystem::path& out_dir);

}  // namespace swbeam
