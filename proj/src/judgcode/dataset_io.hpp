#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "judgcode/codebook.hpp"

namespace judgcode::dataset {

// Column order of the CSV and JSON exports.
const std::vector<std::string>& columns();

std::string to_csv(const std::vector<codebook::AnalysisRow>& rows);
std::vector<codebook::AnalysisRow> from_csv(std::string_view text);

std::string to_json(const std::vector<codebook::AnalysisRow>& rows);
std::vector<codebook::AnalysisRow> from_json(std::string_view text);

// RFC 4180 field splitting; throws ParseError on unbalanced quotes.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);
std::string csv_escape(std::string_view field);

// Shortest decimal text that reads back to the same double.
std::string format_number(double v);

}  // namespace judgcode::dataset
