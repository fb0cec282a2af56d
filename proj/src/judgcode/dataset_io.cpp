#include "judgcode/dataset_io.hpp"

#include <charconv>
#include <functional>
#include <optional>

#include <fmt/format.h>
#include <json.hpp>

#include "judgcode/errors.hpp"

namespace judgcode::dataset {

using codebook::AnalysisRow;

namespace {

// One column: how to render a row's cell ("" = missing) and how to set it.
struct Column {
  std::string name;
  std::function<std::string(const AnalysisRow&)> get;
  std::function<void(AnalysisRow&, const std::string&)> set;
};

std::optional<double> parse_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("not a number: '" + s + "'");
  return v;
}

std::optional<int> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ParseError("not an integer: '" + s + "'");
  return v;
}

std::string opt_num(const std::optional<double>& v) { return v ? format_number(*v) : ""; }
std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

int require_flag(const std::string& s, const std::string& col) {
  auto v = parse_int(s);
  if (!v || (*v != 0 && *v != 1)) throw ParseError("column " + col + " must be 0 or 1, got '" + s + "'");
  return *v;
}

std::optional<int> opt_flag(const std::string& s, const std::string& col) {
  if (s.empty()) return std::nullopt;
  return require_flag(s, col);
}

template <class E, class F>
std::optional<E> parse_enum(const std::string& s, F from, const char* col) {
  if (s.empty()) return std::nullopt;
  auto v = from(s);
  if (!v) throw ParseError(std::string("column ") + col + ": unknown value '" + s + "'");
  return v;
}

const std::vector<Column>& column_defs() {
  static const std::vector<Column> cols = {
      {"ecli", [](const AnalysisRow& r) { return r.ecli; }, [](AnalysisRow& r, const std::string& s) { r.ecli = s; }},
      {"year", [](const AnalysisRow& r) { return std::to_string(r.year); },
       [](AnalysisRow& r, const std::string& s) { r.year = parse_int(s).value_or(0); }},
      {"court", [](const AnalysisRow& r) { return r.court; }, [](AnalysisRow& r, const std::string& s) { r.court = s; }},
      {"ln_prison_months", [](const AnalysisRow& r) { return opt_num(r.ln_prison_months); },
       [](AnalysisRow& r, const std::string& s) { r.ln_prison_months = parse_double(s); }},
      {"prison_months", [](const AnalysisRow& r) { return opt_num(r.prison_months); },
       [](AnalysisRow& r, const std::string& s) { r.prison_months = parse_double(s); }},
      {"max_prison_months", [](const AnalysisRow& r) { return opt_num(r.max_prison_months); },
       [](AnalysisRow& r, const std::string& s) { r.max_prison_months = parse_double(s); }},
      {"max_bucket",
       [](const AnalysisRow& r) { return r.max_bucket ? std::string(codebook::to_string(*r.max_bucket)) : ""; },
       [](AnalysisRow& r, const std::string& s) {
         r.max_bucket = parse_enum<codebook::MaxBucket>(s, codebook::max_bucket_from_string, "max_bucket");
       }},
      {"offence_class",
       [](const AnalysisRow& r) { return r.offence_class ? std::string(codebook::to_string(*r.offence_class)) : ""; },
       [](AnalysisRow& r, const std::string& s) {
         r.offence_class =
             parse_enum<codebook::OffenceClass>(s, codebook::offence_class_from_string, "offence_class");
       }},
      {"n_offences", [](const AnalysisRow& r) { return opt_int(r.n_offences); },
       [](AnalysisRow& r, const std::string& s) { r.n_offences = parse_int(s); }},
      {"guidelines", [](const AnalysisRow& r) { return std::to_string(r.guidelines); },
       [](AnalysisRow& r, const std::string& s) { r.guidelines = require_flag(s, "guidelines"); }},
      {"prosecution_expertise", [](const AnalysisRow& r) { return std::to_string(r.prosecution_expertise); },
       [](AnalysisRow& r, const std::string& s) {
         r.prosecution_expertise = require_flag(s, "prosecution_expertise");
       }},
      {"age", [](const AnalysisRow& r) { return opt_int(r.age); },
       [](AnalysisRow& r, const std::string& s) { r.age = parse_int(s); }},
      {"age_bucket",
       [](const AnalysisRow& r) { return r.age_bucket ? std::string(codebook::to_string(*r.age_bucket)) : ""; },
       [](AnalysisRow& r, const std::string& s) {
         r.age_bucket = parse_enum<codebook::AgeBucket>(s, codebook::age_bucket_from_string, "age_bucket");
       }},
      {"born_abroad", [](const AnalysisRow& r) { return opt_int(r.born_abroad); },
       [](AnalysisRow& r, const std::string& s) { r.born_abroad = opt_flag(s, "born_abroad"); }},
      {"female", [](const AnalysisRow& r) { return std::to_string(r.female); },
       [](AnalysisRow& r, const std::string& s) { r.female = require_flag(s, "female"); }},
      {"repeat_offender", [](const AnalysisRow& r) { return opt_int(r.repeat_offender); },
       [](AnalysisRow& r, const std::string& s) { r.repeat_offender = opt_flag(s, "repeat_offender"); }},
      {"multiple_victims", [](const AnalysisRow& r) { return opt_int(r.multiple_victims); },
       [](AnalysisRow& r, const std::string& s) { r.multiple_victims = opt_flag(s, "multiple_victims"); }},
      {"basic_skills", [](const AnalysisRow& r) { return std::to_string(r.basic_skills); },
       [](AnalysisRow& r, const std::string& s) { r.basic_skills = require_flag(s, "basic_skills"); }},
      {"special_skills", [](const AnalysisRow& r) { return std::to_string(r.special_skills); },
       [](AnalysisRow& r, const std::string& s) { r.special_skills = require_flag(s, "special_skills"); }},
  };
  return cols;
}

// Columns whose JSON value is a number rather than a string.
bool numeric_column(const std::string& name) {
  return name != "ecli" && name != "court" && name != "max_bucket" && name != "offence_class" &&
         name != "age_bucket";
}

}  // namespace

std::string format_number(double v) { return fmt::format("{}", v); }

const std::vector<std::string>& columns() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& c : column_defs()) n.push_back(c.name);
    return n;
  }();
  return names;
}

std::string csv_escape(std::string_view f) {
  if (f.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(f);
  std::string out = "\"";
  for (char c : f) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  long line = 1;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (any || !field.empty()) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
      }
      row.clear();
      field.clear();
      any = false;
      ++line;
    } else {
      field += c;
      any = true;
    }
  }
  if (quoted) throw ParseError("unterminated quoted CSV field", line, 0);
  if (any || !field.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_csv(const std::vector<AnalysisRow>& rows) {
  const auto& cols = column_defs();
  std::string out;
  for (size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i].name;
  out += '\n';
  for (const auto& r : rows) {
    for (size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + csv_escape(cols[i].get(r));
    out += '\n';
  }
  return out;
}

std::vector<AnalysisRow> from_csv(std::string_view text) {
  auto table = parse_csv(text);
  if (table.empty()) throw ParseError("dataset CSV has no header");
  const auto& cols = column_defs();
  std::vector<int> index(cols.size(), -1);
  for (size_t i = 0; i < cols.size(); ++i)
    for (size_t h = 0; h < table[0].size(); ++h)
      if (table[0][h] == cols[i].name) index[i] = static_cast<int>(h);
  for (size_t i = 0; i < cols.size(); ++i)
    if (index[i] < 0) throw ParseError("dataset CSV lacks column '" + cols[i].name + "'");
  std::vector<AnalysisRow> rows;
  for (size_t r = 1; r < table.size(); ++r) {
    if (table[r].size() != table[0].size())
      throw ParseError(fmt::format("dataset CSV row {} has {} fields, header has {}", r + 1, table[r].size(),
                                   table[0].size()),
                       static_cast<long>(r + 1));
    AnalysisRow row;
    for (size_t i = 0; i < cols.size(); ++i) {
      try {
        cols[i].set(row, table[r][static_cast<size_t>(index[i])]);
      } catch (const ParseError& e) {
        throw ParseError(fmt::format("dataset CSV row {}: {}", r + 1, e.what()), static_cast<long>(r + 1));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_json(const std::vector<AnalysisRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    for (const auto& c : column_defs()) {
      std::string v = c.get(r);
      if (v.empty() && c.name != "ecli" && c.name != "court")
        o[c.name] = nullptr;
      else if (numeric_column(c.name))
        o[c.name] = nlohmann::ordered_json::parse(v);
      else
        o[c.name] = v;
    }
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::vector<AnalysisRow> from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("dataset JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("dataset JSON must be an array");
  std::vector<AnalysisRow> rows;
  for (const auto& o : j) {
    AnalysisRow row;
    for (const auto& c : column_defs()) {
      auto it = o.find(c.name);
      std::string v;
      if (it != o.end() && !it->is_null()) {
        if (it->is_string())
          v = it->get<std::string>();
        else if (it->is_number_integer())
          v = std::to_string(it->get<long long>());
        else
          v = format_number(it->get<double>());
      }
      c.set(row, v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace judgcode::dataset
