#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace qwalk::testing {

struct CsvTable {
  std::string header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Plain comma split; the quoted warnings column is only ever inspected whole.
inline CsvTable read_csv(const std::filesystem::path& path) {
  CsvTable table;
  std::istringstream in(read_file(path));
  std::getline(in, table.header);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream cells(line);
    while (std::getline(cells, field, ',')) {
      fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
      fields.emplace_back();
    }
    table.rows.push_back(std::move(fields));
  }
  return table;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("qwalk_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace qwalk::testing
