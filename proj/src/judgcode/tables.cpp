#include "judgcode/tables.hpp"

#include <fstream>
#include <sstream>

#include "judgcode/embedded_config.hpp"
#include "judgcode/errors.hpp"

namespace judgcode {

std::vector<TableRow> parse_delimited(std::string_view text, char delimiter) {
  std::vector<TableRow> rows;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') {
      if (eol == text.size()) break;
      continue;
    }
    TableRow row;
    row.line = line_no;
    size_t start = 0;
    while (true) {
      size_t d = line.find(delimiter, start);
      if (d == std::string_view::npos) {
        row.fields.emplace_back(line.substr(start));
        break;
      }
      row.fields.emplace_back(line.substr(start, d - start));
      start = d + 1;
    }
    rows.push_back(std::move(row));
    if (eol == text.size()) break;
  }
  return rows;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed for '" + path.string() + "'");
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::string load_config_text(const std::filesystem::path& path, const std::string& default_name) {
  if (!path.empty()) {
    if (!std::filesystem::exists(path))
      throw ConfigError("config file '" + path.string() + "' does not exist");
    return read_file(path);
  }
  const auto& files = embedded_config_files();
  auto it = files.find(default_name);
  if (it == files.end()) throw ConfigError("no built-in config table named '" + default_name + "'");
  return std::string(it->second);
}

}  // namespace judgcode
