#include "judgcode/run_config.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include "judgcode/errors.hpp"
#include "judgcode/tables.hpp"
#include "judgcode/text.hpp"

namespace judgcode {

namespace {

using nlohmann::json;

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> k = {
      "source",          "corpus_dir",        "output_dir",     "seed",           "date_range",
      "models",          "query",             "threads",        "sample_size",    "check_date",
      "legal_basis_match", "outlier_threshold", "statute_table",  "statute_articles", "lint_rules",
      "heading_synonyms", "juvenile_markers",  "fold_table",     "dictionaries"};
  return k;
}

Date date_field(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError(key + " must be a date string");
  auto d = parse_date(v.get<std::string>());
  if (!d) throw ConfigError(fmt::format("{}: invalid date {}", key, v.get<std::string>()));
  return *d;
}

}  // namespace

RunConfig RunConfig::from_json_file(const std::filesystem::path& path) {
  return from_json_text(read_file(path), path.parent_path());
}

RunConfig RunConfig::from_json_text(const std::string& text, const std::filesystem::path& base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("run config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("run config must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end())
      throw ConfigError("run config: unknown key " + key);

  auto path = [&](const json& v, const std::string& key) -> std::filesystem::path {
    if (!v.is_string()) throw ConfigError(key + " must be a path string");
    std::filesystem::path p = v.get<std::string>();
    if (p.empty() || p.is_absolute() || base.empty()) return p;
    return base / p;
  };

  RunConfig c;
  try {
    if (j.contains("source")) {
      c.source = j["source"].get<std::string>();
      if (c.source.find("://") == std::string::npos && !c.source.empty() && !base.empty() &&
          std::filesystem::path(c.source).is_relative())
        c.source = (base / c.source).string();
    }
    if (j.contains("corpus_dir")) c.corpus_dir = path(j["corpus_dir"], "corpus_dir");
    if (j.contains("output_dir")) c.output_dir = path(j["output_dir"], "output_dir");
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("date_range")) {
      const auto& r = j["date_range"];
      if (!r.is_array() || r.size() != 2) throw ConfigError("date_range must be [from, to]");
      c.date_from = date_field(r[0], "date_range");
      c.date_to = date_field(r[1], "date_range");
      if (*c.date_to < *c.date_from) throw ConfigError("date_range ends before it starts");
    }
    if (j.contains("models")) c.models = j["models"].get<std::vector<int>>();
    if (j.contains("query")) {
      if (!j["query"].is_object()) throw ConfigError("query must be an object of strings");
      for (const auto& [k, v] : j["query"].items()) c.query.emplace_back(k, v.get<std::string>());
    }
    if (j.contains("threads")) c.threads = j["threads"].get<int>();
    if (j.contains("sample_size")) c.sample_size = j["sample_size"].get<long>();
    if (j.contains("check_date")) c.check_date = date_field(j["check_date"], "check_date");
    if (j.contains("legal_basis_match")) {
      auto m = j["legal_basis_match"].get<std::string>();
      if (m == "exact") c.legal_basis_match = stats::LegalBasisMatch::exact;
      else if (m == "subset") c.legal_basis_match = stats::LegalBasisMatch::subset;
      else throw ConfigError("legal_basis_match must be exact or subset");
    }
    if (j.contains("outlier_threshold")) c.outlier_threshold = j["outlier_threshold"].get<double>();
    if (j.contains("statute_table")) c.statute_table = path(j["statute_table"], "statute_table");
    if (j.contains("statute_articles")) c.statute_articles = path(j["statute_articles"], "statute_articles");
    if (j.contains("lint_rules")) c.lint_rules = path(j["lint_rules"], "lint_rules");
    if (j.contains("heading_synonyms")) c.heading_synonyms = path(j["heading_synonyms"], "heading_synonyms");
    if (j.contains("juvenile_markers")) c.juvenile_markers = path(j["juvenile_markers"], "juvenile_markers");
    if (j.contains("fold_table")) c.fold_table = path(j["fold_table"], "fold_table");
    if (j.contains("dictionaries")) {
      const auto& d = j["dictionaries"];
      if (!d.is_object()) throw ConfigError("dictionaries must be an object of paths");
      const std::pair<const char*, std::filesystem::path DictionaryPaths::*> fields[] = {
          {"basic_terms", &DictionaryPaths::basic_terms},
          {"special_terms", &DictionaryPaths::special_terms},
          {"prosecution_expertise", &DictionaryPaths::prosecution_expertise},
          {"detection_methods", &DictionaryPaths::detection_methods},
          {"guidelines", &DictionaryPaths::guidelines},
          {"large_scale_terms", &DictionaryPaths::large_scale_terms},
          {"female_markers", &DictionaryPaths::female_markers},
          {"recidivism_phrases", &DictionaryPaths::recidivism_phrases},
          {"foreign_countries", &DictionaryPaths::foreign_countries},
          {"misspellings", &DictionaryPaths::misspellings},
          {"statute_aliases", &DictionaryPaths::statute_aliases},
      };
      for (const auto& [key, value] : d.items()) {
        bool found = false;
        for (const auto& [name, member] : fields)
          if (key == name) {
            c.dictionaries.*member = path(value, "dictionaries." + key);
            found = true;
          }
        if (!found) throw ConfigError("dictionaries: unknown key " + key);
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("run config: ") + e.what());
  }
  c.validate();
  return c;
}

void RunConfig::validate() const {
  if (models.empty()) throw ConfigError("models: at least one model is required");
  for (int m : models)
    if (m < 1 || m > 3) throw ConfigError(fmt::format("models: unknown model {}", m));
  if (threads < 0) throw ConfigError("threads must be non-negative");
  if (sample_size < 0) throw ConfigError("sample_size must be non-negative");
  if (!(outlier_threshold > 0)) throw ConfigError("outlier_threshold must be positive");
  if (date_from && date_to && *date_to < *date_from) throw ConfigError("date range ends before it starts");
}

void RunConfig::set(const std::string& key, const std::string& value) {
  auto number = [&](auto& target) {
    using T = std::decay_t<decltype(target)>;
    try {
      size_t used = 0;
      T v{};
      if constexpr (std::is_same_v<T, double>) v = std::stod(value, &used);
      else if constexpr (std::is_same_v<T, std::uint64_t>) v = std::stoull(value, &used);
      else v = static_cast<T>(std::stoll(value, &used));
      if (used != value.size()) throw std::invalid_argument(value);
      target = v;
    } catch (const std::exception&) {
      throw ConfigError(fmt::format("{}: not a number: {}", key, value));
    }
  };
  auto date = [&] {
    auto d = parse_date(value);
    if (!d) throw ConfigError(fmt::format("{}: invalid date {}", key, value));
    return *d;
  };
  if (key == "source") source = value;
  else if (key == "corpus_dir") corpus_dir = value;
  else if (key == "output_dir") output_dir = value;
  else if (key == "seed") {
    if (!value.empty() && value[0] == '-') throw ConfigError("seed must be non-negative");
    number(seed);
  } else if (key == "date_from") date_from = date();
  else if (key == "date_to") date_to = date();
  else if (key == "models") {
    models.clear();
    size_t pos = 0;
    while (pos <= value.size()) {
      size_t end = value.find(',', pos);
      if (end == std::string::npos) end = value.size();
      std::string part(trim(std::string_view(value).substr(pos, end - pos)));
      if (part == "1" || part == "2" || part == "3") models.push_back(part[0] - '0');
      else throw ConfigError("models: expected a list such as 1,2,3");
      pos = end + 1;
    }
  } else if (key == "query") {
    size_t eq = value.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("query: expected name=value");
    query.emplace_back(value.substr(0, eq), value.substr(eq + 1));
  } else if (key == "threads") number(threads);
  else if (key == "sample_size") number(sample_size);
  else if (key == "check_date") check_date = date();
  else if (key == "legal_basis_match") {
    if (value == "exact") legal_basis_match = stats::LegalBasisMatch::exact;
    else if (value == "subset") legal_basis_match = stats::LegalBasisMatch::subset;
    else throw ConfigError("legal_basis_match must be exact or subset");
  } else if (key == "outlier_threshold") number(outlier_threshold);
  else if (key == "statute_table") statute_table = value;
  else if (key == "statute_articles") statute_articles = value;
  else if (key == "lint_rules") lint_rules = value;
  else if (key == "heading_synonyms") heading_synonyms = value;
  else if (key == "juvenile_markers") juvenile_markers = value;
  else if (key == "fold_table") fold_table = value;
  else if (key.rfind("dictionaries.", 0) == 0) {
    std::string name = key.substr(13);
    RunConfig probe = from_json_text(nlohmann::json{{"dictionaries", {{name, value}}}}.dump());
    std::filesystem::path DictionaryPaths::*members[] = {
        &DictionaryPaths::basic_terms,       &DictionaryPaths::special_terms,      &DictionaryPaths::prosecution_expertise,
        &DictionaryPaths::detection_methods, &DictionaryPaths::guidelines,         &DictionaryPaths::large_scale_terms,
        &DictionaryPaths::female_markers,    &DictionaryPaths::recidivism_phrases, &DictionaryPaths::foreign_countries,
        &DictionaryPaths::misspellings,      &DictionaryPaths::statute_aliases};
    for (auto m : members)
      if (!(probe.dictionaries.*m).empty()) dictionaries.*m = probe.dictionaries.*m;
  } else {
    throw ConfigError("unknown setting " + key);
  }
}

Resources Resources::load(const RunConfig& c) {
  auto text = [](const std::filesystem::path& p, const char* name) {
    try {
      return load_config_text(p, name);
    } catch (const IoError& e) {
      throw ConfigError(e.what());
    }
  };
  auto wrap = [](const char* name, auto f) {
    try {
      return f();
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      throw ConfigError(fmt::format("{}: {}", name, e.what()));
    }
  };
  return Resources{
      wrap("fold table", [&] { return FoldTable::parse(text(c.fold_table, "fold_table.tsv")); }),
      wrap("heading synonyms",
           [&] { return segment::HeadingTable::parse(text(c.heading_synonyms, "heading_synonyms.tsv")); }),
      wrap("juvenile markers",
           [&] { return ingest::JuvenileMarkers::parse(text(c.juvenile_markers, "juvenile_markers.tsv")); }),
      wrap("dictionaries", [&] { return Dictionaries::load(c.dictionaries); }),
      wrap("statute table",
           [&] { return codebook::StatuteMaxTable::parse(text(c.statute_table, "statute_maxima.tsv")); }),
      wrap("statute articles",
           [&] { return lint::ArticleBounds::parse(text(c.statute_articles, "statute_articles.tsv")); }),
      wrap("lint rules", [&] { return lint::RuleSet::parse(text(c.lint_rules, "lint_rules.tsv")); }),
  };
}

}  // namespace judgcode
