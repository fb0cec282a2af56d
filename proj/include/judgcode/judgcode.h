/* C interface to the judgment coding library.
 *
 * Objects are opaque handles released with their *_free function. Every
 * function returning jc_status leaves a message for jc_last_error() on
 * failure; the message is per thread and valid until the next failing call.
 * Strings returned through char** are owned by the caller and released with
 * jc_string_free().
 */
#ifndef JUDGCODE_H
#define JUDGCODE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(JUDGCODE_BUILDING_LIBRARY)
#    define JC_API __declspec(dllexport)
#  else
#    define JC_API __declspec(dllimport)
#  endif
#else
#  define JC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jc_status {
  JC_OK = 0,
  JC_INVALID_ARGUMENT = 1,
  JC_IO_ERROR = 2,
  JC_PARSE_ERROR = 3,
  JC_NETWORK_ERROR = 4,
  JC_DOMAIN_ERROR = 5,
  JC_RANK_DEFICIENT = 6,
  JC_DATA_ERROR = 7,
  JC_CONFIG_ERROR = 8,
  JC_NOT_FOUND = 9,
  JC_INTERNAL_ERROR = 10
} jc_status;

typedef struct jc_config jc_config;
typedef struct jc_document jc_document;

JC_API const char* jc_version(void);
JC_API const char* jc_last_error(void);
JC_API const char* jc_status_name(jc_status status);
JC_API void jc_string_free(char* s);

/* Run configuration: a JSON file, then key/value overrides (see README). */
JC_API jc_status jc_config_new(jc_config** out);
JC_API jc_status jc_config_load(const char* path, jc_config** out);
JC_API jc_status jc_config_set(jc_config* config, const char* key, const char* value);
JC_API void jc_config_free(jc_config* config);

/* Commands. `text` receives the report printed by the CLI; `warnings`
 * (may be NULL) receives newline-separated soft failures, possibly empty. */
JC_API jc_status jc_cmd_fetch(const jc_config* config, char** text, char** warnings);
JC_API jc_status jc_cmd_code(const jc_config* config, char** text, char** warnings);
/* `dataset` may be NULL for <output_dir>/dataset.csv. */
JC_API jc_status jc_cmd_analyze(const jc_config* config, const char* dataset, char** text, char** warnings);
/* `records` may be NULL for <output_dir>/records.json. */
JC_API jc_status jc_cmd_sample(const jc_config* config, const char* records, char** text, char** warnings);
/* One heading per worksheet; `headings` may be NULL. */
JC_API jc_status jc_cmd_reliability(const jc_config* config, const char* const* worksheets,
                                    const char* const* headings, size_t count, char** text, char** warnings);
/* `term` NULL or empty selects the large-scale dictionary. */
JC_API jc_status jc_cmd_chisq(const jc_config* config, const char* term, const char* split, char** text,
                              char** warnings);
JC_API jc_status jc_cmd_lint(const jc_config* config, char** text, char** warnings);

/* Single documents, with the compiled-in tables. */
JC_API jc_status jc_document_parse(const char* xml, size_t length, jc_document** out);
JC_API void jc_document_free(jc_document* doc);
JC_API jc_status jc_document_ecli(const jc_document* doc, char** out);
/* Coded record as JSON (the records.json element layout). */
JC_API jc_status jc_document_code(const jc_document* doc, char** json);
/* Lint findings as a JSON array. */
JC_API jc_status jc_document_lint(const jc_document* doc, char** json);

typedef struct jc_quantity {
  double amount;
  double months; /* NaN unless the unit is a duration */
  int unit;      /* 0 days, 1 weeks, 2 months, 3 years, 4 hours, 5 euros, 6 none */
  int inconsistent;
  int found;
} jc_quantity;

JC_API jc_status jc_parse_quantity(const char* text, jc_quantity* out);
/* Value of Dutch or English number words; JC_NOT_FOUND when unparseable. */
JC_API jc_status jc_parse_number_words(const char* text, long* out);

JC_API jc_status jc_cohens_kappa(long tp, long fp, long fn, long tn, double* accuracy, double* kappa,
                                 int* has_kappa);
JC_API jc_status jc_chi_square_2x2(long a, long b, long c, long d, double* chi2, double* p);

/* Least squares on a row-major n x k design. Each output array has k
 * entries; r2 and adjusted_r2 may be NULL. */
JC_API jc_status jc_fit_ols(const double* design, size_t n, size_t k, const double* y, double* coefficients,
                            double* standard_errors, double* r2, double* adjusted_r2);
JC_API jc_status jc_durbin_watson(const double* residuals, size_t n, double* out);

/* Seeded proportional court x year sample. Inputs are parallel arrays;
 * `out` receives the sampled ECLIs, newline-separated and sorted. */
JC_API jc_status jc_stratified_sample(const char* const* ecli, const char* const* court, const int* year,
                                      size_t count, long size, uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif
