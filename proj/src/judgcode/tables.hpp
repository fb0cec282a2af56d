#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace judgcode {

// One non-comment line of a delimited config file.
struct TableRow {
  std::vector<std::string> fields;
  int line = 0;
};

// Parses tab-delimited text. Lines starting with '#' and blank lines are
// skipped; fields are not trimmed. A trailing '\r' is removed.
std::vector<TableRow> parse_delimited(std::string_view text, char delimiter = '\t');

// Reads a config table from `path` if non-empty, otherwise returns the
// compiled-in default named `default_name`.
std::string load_config_text(const std::filesystem::path& path, const std::string& default_name);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace judgcode
