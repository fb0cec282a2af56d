#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "judgcode/extract.hpp"

namespace judgcode {

// The coded-record JSON layout: the published Dutch keys in their published
// order, followed by keys prefixed "x_" that the published record lacks.
nlohmann::ordered_json record_to_json(const extract::CodedRecord& r);
extract::CodedRecord record_from_json(const nlohmann::json& j);

std::string_view decision_label(extract::DecisionKind k);
std::string_view unit_label(Unit u);

// Array of records, sorted by ECLI.
std::string records_to_json_text(const std::vector<extract::CodedRecord>& records);
std::vector<extract::CodedRecord> records_from_json_text(const std::string& text);

}  // namespace judgcode
