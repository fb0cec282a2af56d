#pragma once

#include <map>
#include <string>
#include <string_view>

namespace judgcode {

// Default config tables keyed by file name ("statute_maxima.tsv", ...).
const std::map<std::string, std::string_view>& embedded_config_files();

}  // namespace judgcode
