#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "nlmod/cli/config.hpp"
#include "nlmod/cli/output.hpp"

namespace nlmod::cli {

std::string format_number(double value) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  if (table.columns.size() != table.header.size())
    throw std::logic_error("write_csv: header and column count differ");
  const std::size_t rows = table.columns.empty() ? 0 : table.columns.front().size();
  for (const auto& c : table.columns) {
    if (c.size() != rows) throw std::logic_error("write_csv: ragged columns");
  }

  std::string text;
  for (std::size_t k = 0; k < table.header.size(); ++k) {
    if (k) text += ',';
    text += table.header[k];
  }
  text += '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < table.columns.size(); ++k) {
      if (k) text += ',';
      text += format_number(table.columns[k][r]);
    }
    text += '\n';
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw ConfigError("failed writing '" + path.string() + "'");
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'");
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) return table;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) table.header.push_back(cell);
  }
  table.columns.resize(table.header.size());
  while (std::getline(in, line)) {
    std::size_t pos = 0;
    for (std::size_t k = 0; k < table.header.size(); ++k) {
      const std::size_t end = std::min(line.find(',', pos), line.size());
      double v = 0.0;
      const auto res = std::from_chars(line.data() + pos, line.data() + end, v);
      if (res.ec != std::errc{}) throw ConfigError("malformed number in '" + path.string() + "'");
      table.columns[k].push_back(v);
      pos = end + 1;
    }
  }
  return table;
}

}  // namespace nlmod::cli
