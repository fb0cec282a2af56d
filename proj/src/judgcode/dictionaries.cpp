#include "judgcode/dictionaries.hpp"

#include <algorithm>

#include "judgcode/errors.hpp"
#include "judgcode/tables.hpp"

namespace judgcode {

CategoryDictionary CategoryDictionary::parse(std::string_view tsv, bool labelled, const std::string& name) {
  CategoryDictionary d;
  for (const auto& row : parse_delimited(tsv)) {
    std::string label, term;
    if (labelled) {
      if (row.fields.size() < 2 || row.fields[0].empty() || row.fields[1].empty())
        throw ConfigError(name + " line " + std::to_string(row.line) + ": expected <label>\\t<term>");
      label = row.fields[0];
      term = row.fields[1];
    } else {
      if (row.fields.empty() || row.fields[0].empty())
        throw ConfigError(name + " line " + std::to_string(row.line) + ": empty term");
      term = row.fields[0];
    }
    auto it = std::find(d.labels_.begin(), d.labels_.end(), label);
    int idx = static_cast<int>(it - d.labels_.begin());
    if (it == d.labels_.end()) d.labels_.push_back(label);
    d.matcher_.add(normalize_text(term), idx);
    ++d.terms_;
  }
  return d;
}

std::vector<std::string> CategoryDictionary::find(const TokenizedText& text, size_t begin, size_t end) const {
  std::vector<bool> hit(labels_.size(), false);
  for (const auto& m : matcher_.find_all(text, begin, end)) hit[static_cast<size_t>(m.label)] = true;
  std::vector<std::string> out;
  for (size_t i = 0; i < labels_.size(); ++i)
    if (hit[i]) out.push_back(labels_[i]);
  return out;
}

StatuteAliases StatuteAliases::parse(std::string_view tsv) {
  StatuteAliases s;
  for (const auto& row : parse_delimited(tsv)) {
    if (row.fields.size() < 2 || row.fields[0].empty() || row.fields[1].empty())
      throw ConfigError("statute aliases line " + std::to_string(row.line) + ": expected <identifier>\\t<alias>");
    TokenizedText t(normalize_text(row.fields[1]));
    Alias a;
    a.identifier = row.fields[0];
    for (size_t i = 0; i < t.tokens().size(); ++i) a.tokens.emplace_back(t.token(i));
    if (a.tokens.empty()) continue;
    s.aliases_.push_back(std::move(a));
  }
  std::stable_sort(s.aliases_.begin(), s.aliases_.end(),
                   [](const Alias& a, const Alias& b) { return a.tokens.size() > b.tokens.size(); });
  return s;
}

std::optional<std::pair<std::string, size_t>> StatuteAliases::match(const TokenizedText& text, size_t tok) const {
  const size_t n = text.tokens().size();
  for (const auto& a : aliases_) {
    if (tok + a.tokens.size() > n) continue;
    bool ok = true;
    for (size_t k = 0; k < a.tokens.size() && ok; ++k) ok = text.token(tok + k) == a.tokens[k];
    if (ok) return std::make_pair(a.identifier, a.tokens.size());
  }
  return std::nullopt;
}

bool StatuteAliases::known(std::string_view identifier) const {
  return std::any_of(aliases_.begin(), aliases_.end(), [&](const Alias& a) { return a.identifier == identifier; });
}

Dictionaries Dictionaries::load(const DictionaryPaths& p) {
  auto cat = [](const std::filesystem::path& path, const char* file, bool labelled) {
    return CategoryDictionary::parse(load_config_text(path, file), labelled, file);
  };
  Dictionaries d{
      cat(p.basic_terms, "tech_terms_basic.tsv", true),
      cat(p.special_terms, "tech_terms_special.tsv", true),
      cat(p.prosecution_expertise, "prosecution_expertise.tsv", true),
      cat(p.detection_methods, "detection_methods.tsv", true),
      cat(p.guidelines, "guidelines.tsv", false),
      cat(p.large_scale_terms, "large_scale_terms.tsv", false),
      cat(p.female_markers, "female_markers.tsv", false),
      cat(p.recidivism_phrases, "recidivism_phrases.tsv", true),
      cat(p.foreign_countries, "foreign_countries.tsv", true),
      numerals::MisspellingTable::parse(load_config_text(p.misspellings, "misspellings.tsv")),
      StatuteAliases::parse(load_config_text(p.statute_aliases, "statute_aliases.tsv")),
  };
  for (const auto& l : d.recidivism.labels())
    if (l != "first_offender" && l != "repeat_offender")
      throw ConfigError("recidivism_phrases: unknown label '" + l + "'");
  for (const auto& l : d.countries.labels())
    if (l != "domestic" && l != "foreign") throw ConfigError("foreign_countries: unknown label '" + l + "'");
  return d;
}

const Dictionaries& Dictionaries::builtin() {
  static const Dictionaries d = load({});
  return d;
}

}  // namespace judgcode
