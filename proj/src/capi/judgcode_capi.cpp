#include "judgcode/judgcode.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

#include "judgcode/commands.hpp"
#include "judgcode/errors.hpp"
#include "judgcode/ingest.hpp"
#include "judgcode/lint.hpp"
#include "judgcode/numerals.hpp"
#include "judgcode/quantity.hpp"
#include "judgcode/record_json.hpp"
#include "judgcode/reports.hpp"
#include "judgcode/segmenter.hpp"
#include "judgcode/stats/diagnostics.hpp"
#include "judgcode/stats/ols.hpp"
#include "judgcode/stats/reliability.hpp"
#include "judgcode/stats/sampling.hpp"

struct jc_config {
  judgcode::RunConfig config;
};

struct jc_document {
  judgcode::JudgmentDocument doc;
};

namespace {

thread_local std::string g_last_error;

jc_status fail(jc_status s, std::string message) {
  g_last_error = std::move(message);
  return s;
}

template <class F>
jc_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return JC_OK;
  } catch (const judgcode::Error& e) {
    return fail(static_cast<jc_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(JC_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(JC_INTERNAL_ERROR, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

void require(const void* p, const char* name) {
  if (!p) throw judgcode::InvalidArgument(std::string(name) + " is NULL");
}

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

void emit(const judgcode::commands::CommandOutput& r, char** text, char** warnings) {
  char* t = dup(r.text);
  if (warnings) {
    try {
      *warnings = dup(join(r.warnings));
    } catch (...) {
      std::free(t);
      throw;
    }
  }
  *text = t;
}

}  // namespace

extern "C" {

const char* jc_version(void) { return "0.1.0"; }

const char* jc_last_error(void) { return g_last_error.c_str(); }

const char* jc_status_name(jc_status status) {
  switch (status) {
    case JC_OK: return "ok";
    case JC_INVALID_ARGUMENT: return "invalid argument";
    case JC_IO_ERROR: return "i/o error";
    case JC_PARSE_ERROR: return "parse error";
    case JC_NETWORK_ERROR: return "network error";
    case JC_DOMAIN_ERROR: return "domain error";
    case JC_RANK_DEFICIENT: return "rank deficient";
    case JC_DATA_ERROR: return "data error";
    case JC_CONFIG_ERROR: return "config error";
    case JC_NOT_FOUND: return "not found";
    case JC_INTERNAL_ERROR: return "internal error";
  }
  return "unknown";
}

void jc_string_free(char* s) { std::free(s); }

jc_status jc_config_new(jc_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new jc_config{};
  });
}

jc_status jc_config_load(const char* path, jc_config** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    auto c = judgcode::RunConfig::from_json_file(path);
    *out = new jc_config{std::move(c)};
  });
}

jc_status jc_config_set(jc_config* config, const char* key, const char* value) {
  return guarded([&] {
    require(config, "config");
    require(key, "key");
    require(value, "value");
    config->config.set(key, value);
  });
}

void jc_config_free(jc_config* config) { delete config; }

jc_status jc_cmd_fetch(const jc_config* config, char** text, char** warnings) {
  return guarded([&] {
    require(config, "config");
    require(text, "text");
    emit(judgcode::commands::cmd_fetch(config->config), text, warnings);
  });
}

jc_status jc_cmd_code(const jc_config* config, char** text, char** warnings) {
  return guarded([&] {
    require(config, "config");
    require(text, "text");
    emit(judgcode::commands::cmd_code(config->config), text, warnings);
  });
}

jc_status jc_cmd_analyze(const jc_config* config, const char* dataset, char** text, char** warnings) {
  return guarded([&] {
    require(config, "config");
    require(text, "text");
    emit(judgcode::commands::cmd_analyze(config->config, dataset ? dataset : ""), text, warnings);
  });
}

jc_status jc_cmd_sample(const jc_config* config, const char* records, char** text, char** warnings) {
  return guarded([&] {
    require(config, "config");
    require(text, "text");
    emit(judgcode::commands::cmd_sample(config->config, records ? records : ""), text, warnings);
  });
}

jc_status jc_cmd_reliability(const jc_config* config, const char* const* worksheets, const char* const* headings,
                             size_t count, char** text, char** warnings) {
  return guarded([&] {
    require(config, "config");
    require(text, "text");
    require(worksheets, "worksheets");
    std::vector<std::filesystem::path> paths;
    std::vector<std::string> names;
    for (size_t i = 0; i < count; ++i) {
      require(worksheets[i], "worksheet");
      paths.emplace_back(worksheets[i]);
      if (headings && headings[i]) names.emplace_back(headings[i]);
      else names.push_back(paths.back().stem().string());
    }
    emit(judgcode::commands::cmd_reliability(config->config, paths, names), text, warnings);
  });
}

jc_status jc_cmd_chisq(const jc_config* config, const char* term, const char* split, char** text, char** warnings) {
  return guarded([&] {
    require(config, "config");
    require(split, "split");
    require(text, "text");
    emit(judgcode::commands::cmd_chisq(config->config, term ? term : "", split), text, warnings);
  });
}

jc_status jc_cmd_lint(const jc_config* config, char** text, char** warnings) {
  return guarded([&] {
    require(config, "config");
    require(text, "text");
    emit(judgcode::commands::cmd_lint(config->config), text, warnings);
  });
}

jc_status jc_document_parse(const char* xml, size_t length, jc_document** out) {
  return guarded([&] {
    require(xml, "xml");
    require(out, "out");
    auto doc = judgcode::ingest::normalize_judgment(std::string_view(xml, length));
    judgcode::segment::apply(doc);
    *out = new jc_document{std::move(doc)};
  });
}

void jc_document_free(jc_document* doc) { delete doc; }

jc_status jc_document_ecli(const jc_document* doc, char** out) {
  return guarded([&] {
    require(doc, "doc");
    require(out, "out");
    *out = dup(doc->doc.meta.ecli);
  });
}

jc_status jc_document_code(const jc_document* doc, char** json) {
  return guarded([&] {
    require(doc, "doc");
    require(json, "json");
    *json = dup(judgcode::record_to_json(judgcode::extract::code_judgment(doc->doc)).dump(2));
  });
}

jc_status jc_document_lint(const jc_document* doc, char** json) {
  return guarded([&] {
    require(doc, "doc");
    require(json, "json");
    auto record = judgcode::extract::code_judgment(doc->doc);
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& i : judgcode::lint::lint_judgment(doc->doc, record))
      a.push_back({{"ecli", i.ecli},
                   {"category", judgcode::lint::short_name(i.category)},
                   {"rule", i.rule},
                   {"severity", judgcode::lint::to_string(i.severity)},
                   {"excerpt", i.excerpt}});
    *json = dup(a.dump(2));
  });
}

jc_status jc_parse_quantity(const char* text, jc_quantity* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = jc_quantity{0, std::numeric_limits<double>::quiet_NaN(), 6, 0, 0};
    auto q = judgcode::parse_quantity(text);
    if (!q) return;
    out->found = 1;
    out->amount = q->amount;
    out->unit = static_cast<int>(q->unit);
    out->inconsistent = q->inconsistent ? 1 : 0;
    if (judgcode::is_duration(q->unit)) out->months = judgcode::to_months(q->amount, q->unit);
  });
}

jc_status jc_parse_number_words(const char* text, long* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    auto v = judgcode::numerals::parse_number_words(text);
    if (!v) throw judgcode::Error(judgcode::ErrorCode::not_found, std::string("not a number: ") + text);
    *out = *v;
  });
}

jc_status jc_cohens_kappa(long tp, long fp, long fn, long tn, double* accuracy, double* kappa, int* has_kappa) {
  return guarded([&] {
    require(accuracy, "accuracy");
    auto r = judgcode::stats::cohens_kappa(tp, fp, fn, tn);
    *accuracy = r.accuracy;
    if (kappa) *kappa = r.kappa.value_or(std::numeric_limits<double>::quiet_NaN());
    if (has_kappa) *has_kappa = r.kappa ? 1 : 0;
  });
}

jc_status jc_chi_square_2x2(long a, long b, long c, long d, double* chi2, double* p) {
  return guarded([&] {
    require(chi2, "chi2");
    auto r = judgcode::stats::chi_square_2x2(a, b, c, d);
    *chi2 = r.chi2;
    if (p) *p = r.p;
  });
}

jc_status jc_fit_ols(const double* design, size_t n, size_t k, const double* y, double* coefficients,
                     double* standard_errors, double* r2, double* adjusted_r2) {
  return guarded([&] {
    require(design, "design");
    require(y, "y");
    require(coefficients, "coefficients");
    Eigen::MatrixXd X(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < k; ++j) X(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = design[i * k + j];
    Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(y, static_cast<Eigen::Index>(n));
    std::vector<std::string> names;
    for (size_t j = 0; j < k; ++j) names.push_back("x" + std::to_string(j));
    auto fit = judgcode::stats::fit_ols(X, v, names);
    for (size_t j = 0; j < k; ++j) {
      coefficients[j] = fit.coefficients[j].b;
      if (standard_errors) standard_errors[j] = fit.coefficients[j].se;
    }
    if (r2) *r2 = fit.r2;
    if (adjusted_r2) *adjusted_r2 = fit.adjusted_r2;
  });
}

jc_status jc_durbin_watson(const double* residuals, size_t n, double* out) {
  return guarded([&] {
    require(residuals, "residuals");
    require(out, "out");
    *out = judgcode::stats::durbin_watson(Eigen::Map<const Eigen::VectorXd>(residuals, static_cast<Eigen::Index>(n)));
  });
}

jc_status jc_stratified_sample(const char* const* ecli, const char* const* court, const int* year, size_t count,
                               long size, uint64_t seed, char** out) {
  return guarded([&] {
    require(out, "out");
    if (count) {
      require(ecli, "ecli");
      require(court, "court");
      require(year, "year");
    }
    std::vector<judgcode::stats::SampleUnit> units;
    for (size_t i = 0; i < count; ++i) {
      require(ecli[i], "ecli");
      require(court[i], "court");
      units.push_back({ecli[i], court[i], year[i]});
    }
    *out = dup(join(judgcode::stats::stratified_sample(units, size, seed)));
  });
}

}  // extern "C"
