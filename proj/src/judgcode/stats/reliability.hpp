#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "judgcode/extract.hpp"

namespace judgcode::stats {

struct KappaResult {
  double accuracy = 0;
  std::optional<double> kappa;  // absent when tn == 0
};

// Agreement of the 2x2 found/missing table. Throws InvalidArgument on an empty table.
KappaResult cohens_kappa(long tp, long fp, long fn, long tn);

struct ChiSquare {
  double chi2 = 0;
  double p = 1;
};

// Pearson statistic, 1 df, no continuity correction; table is {{a, b}, {c, d}}.
// Throws DomainError when a row or column total is zero.
ChiSquare chi_square_2x2(long a, long b, long c, long d);

struct ReliabilityTally {
  std::string variable;
  long tp = 0, fp = 0, fn = 0, tn = 0;
  double accuracy = 0;
  std::optional<double> kappa;
};

enum class LegalBasisMatch { exact, subset };

// Worksheet layout shared by the sample and reliability commands.
const std::vector<std::string>& worksheet_columns();

struct WorksheetRow {
  std::string ecli;
  std::string court;
  int year = 0;
  std::string birth_year;   // "-" when absent
  std::string legal_basis;  // "Sr: 33, 33a; Opw: 10"
  std::string decision;     // "gevangenisstraf 6 jaar; taakstraf 240 uur"
  std::string manual_birth_year;
  std::string manual_legal_basis;
  std::string manual_decision;
};

WorksheetRow worksheet_row(const extract::CodedRecord& record);
std::string worksheet_to_csv(const std::vector<WorksheetRow>& rows);
std::vector<WorksheetRow> worksheet_from_csv(std::string_view text);

// Tallies for birth year, legal basis and decision. Throws DataError listing
// the ECLIs with empty manual cells.
std::vector<ReliabilityTally> compare_worksheet(const std::vector<WorksheetRow>& rows,
                                                LegalBasisMatch mode = LegalBasisMatch::exact);

// True when the manual and program codes agree; both present.
bool legal_basis_equal(std::string_view program, std::string_view manual, LegalBasisMatch mode);

}  // namespace judgcode::stats
