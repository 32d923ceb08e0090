#pragma once

#include <string>
#include <utility>
#include <vector>

namespace beamvar {

// Shortest round-trip decimal form of v (printf %.17g trimmed), locale-free.
std::string format_full(double v);

// Column-oriented CSV with header row; all columns must share one length.
// Bodies are byte-stable for identical inputs.
void write_csv(const std::string& path, const std::vector<std::string>& names,
               const std::vector<std::vector<double>>& columns);

// Space-separated companion of write_csv for plotting tools.
void write_dat(const std::string& path,
               const std::vector<std::vector<double>>& columns);

void write_text(const std::string& path, const std::string& content);

}  // namespace beamvar
