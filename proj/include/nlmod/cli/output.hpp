#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace nlmod::cli {

/// Shortest-roundtrip-safe decimal form with 17 significant digits.
std::string format_number(double value);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;  ///< column-major, equal lengths
};

/// Header row, one record per line, '.' decimals, LF endings.
void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);

enum class ChartStyle { line, stem };

struct Chart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<double> x;
  std::vector<double> y;
  ChartStyle style = ChartStyle::line;
};

/// Minimal standalone SVG: axes, min/max tick labels and the data.
std::string render_svg(const Chart& chart);
void write_svg(const std::filesystem::path& path, const Chart& chart);

}  // namespace nlmod::cli
