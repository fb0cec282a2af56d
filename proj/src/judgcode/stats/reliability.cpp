#include "judgcode/stats/reliability.hpp"

#include <map>
#include <set>

#include <boost/math/distributions/chi_squared.hpp>
#include <fmt/format.h>

#include "judgcode/dataset_io.hpp"
#include "judgcode/errors.hpp"
#include "judgcode/record_json.hpp"
#include "judgcode/text.hpp"

namespace judgcode::stats {

KappaResult cohens_kappa(long tp, long fp, long fn, long tn) {
  if (tp < 0 || fp < 0 || fn < 0 || tn < 0) throw InvalidArgument("negative count");
  const double n = static_cast<double>(tp + fp + fn + tn);
  if (n == 0) throw InvalidArgument("empty agreement table");
  KappaResult r;
  r.accuracy = static_cast<double>(tp + tn) / n;
  if (tn == 0) return r;
  const double pe = (static_cast<double>(tp + fp) * static_cast<double>(tp + fn) +
                     static_cast<double>(fn + tn) * static_cast<double>(fp + tn)) /
                    (n * n);
  r.kappa = pe == 1.0 ? 1.0 : (r.accuracy - pe) / (1.0 - pe);
  return r;
}

ChiSquare chi_square_2x2(long a, long b, long c, long d) {
  if (a < 0 || b < 0 || c < 0 || d < 0) throw InvalidArgument("negative count");
  const double r1 = static_cast<double>(a + b), r2 = static_cast<double>(c + d);
  const double c1 = static_cast<double>(a + c), c2 = static_cast<double>(b + d);
  if (r1 == 0 || r2 == 0 || c1 == 0 || c2 == 0) throw DomainError("2x2 table has a zero marginal");
  const double n = r1 + r2;
  const double diff = static_cast<double>(a) * static_cast<double>(d) - static_cast<double>(b) * static_cast<double>(c);
  ChiSquare out;
  out.chi2 = n * diff * diff / (r1 * r2 * c1 * c2);
  out.p = out.chi2 == 0 ? 1.0 : boost::math::cdf(boost::math::complement(boost::math::chi_squared(1.0), out.chi2));
  return out;
}

const std::vector<std::string>& worksheet_columns() {
  static const std::vector<std::string> c = {"ecli",           "court",      "year",
                                             "birth_year",     "legal_basis", "decision",
                                             "manual_birth_year", "manual_legal_basis", "manual_decision"};
  return c;
}

namespace {

constexpr std::string_view kAbsent = "-";

std::string format_legal_basis(const std::vector<extract::StatuteArticles>& entries) {
  std::string out;
  for (const auto& e : entries) {
    if (!out.empty()) out += "; ";
    out += e.statute.empty() ? "?" : e.statute;
    out += ": ";
    for (size_t i = 0; i < e.articles.size(); ++i) {
      if (i) out += ", ";
      out += e.articles[i];
    }
  }
  return out;
}

std::string format_decisions(const std::vector<extract::Decision>& decisions) {
  std::string out;
  for (const auto& d : decisions) {
    if (!out.empty()) out += "; ";
    out += decision_label(d.kind);
    if (d.life) {
      out += " levenslang";
    } else if (d.amount) {
      out += " " + dataset::format_number(*d.amount);
      if (d.unit != Unit::none) out += " " + std::string(unit_label(d.unit));
    }
  }
  return out;
}

using Basis = std::map<std::string, std::set<std::string>>;

Basis parse_basis(std::string_view s) {
  Basis b;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t end = s.find(';', pos);
    if (end == std::string_view::npos) end = s.size();
    std::string_view part = trim(s.substr(pos, end - pos));
    pos = end + 1;
    if (part.empty()) continue;
    size_t colon = part.find(':');
    std::string statute = colon == std::string_view::npos ? "" : std::string(trim(part.substr(0, colon)));
    std::string_view arts = colon == std::string_view::npos ? part : part.substr(colon + 1);
    auto& set = b[to_lower_ascii(statute)];
    size_t p = 0;
    while (p <= arts.size()) {
      size_t e = arts.find_first_of(", ", p);
      if (e == std::string_view::npos) e = arts.size();
      std::string_view a = trim(arts.substr(p, e - p));
      if (!a.empty()) set.insert(to_lower_ascii(a));
      p = e + 1;
    }
  }
  return b;
}

std::string normalize_cell(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : trim(s)) {
    if (c == ' ' || c == '\t') {
      space = true;
      continue;
    }
    if (space && !out.empty()) out += ' ';
    space = false;
    out += static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  }
  return out;
}

enum class Outcome { tp, fp, fn, tn };

template <class Eq>
Outcome classify(std::string_view program, std::string_view manual, Eq equal) {
  const bool p = trim(program) != kAbsent && !trim(program).empty();
  const bool m = trim(manual) != kAbsent;
  if (p && m) return equal(program, manual) ? Outcome::tp : Outcome::fp;
  if (p) return Outcome::fp;
  if (m) return Outcome::fn;
  return Outcome::tn;
}

void add(ReliabilityTally& t, Outcome o) {
  switch (o) {
    case Outcome::tp: ++t.tp; break;
    case Outcome::fp: ++t.fp; break;
    case Outcome::fn: ++t.fn; break;
    case Outcome::tn: ++t.tn; break;
  }
}

}  // namespace

bool legal_basis_equal(std::string_view program, std::string_view manual, LegalBasisMatch mode) {
  Basis p = parse_basis(program), m = parse_basis(manual);
  if (mode == LegalBasisMatch::exact) return p == m;
  for (const auto& [statute, arts] : p) {
    auto it = m.find(statute);
    if (it == m.end()) return false;
    for (const auto& a : arts)
      if (!it->second.count(a)) return false;
  }
  return !p.empty();
}

WorksheetRow worksheet_row(const extract::CodedRecord& record) {
  WorksheetRow w;
  w.ecli = record.meta.ecli;
  w.court = record.meta.court;
  w.year = record.meta.decision_year();
  w.birth_year = record.offender.birth_year ? std::to_string(*record.offender.birth_year) : std::string(kAbsent);
  w.legal_basis = record.legal_basis.entries.empty() ? std::string(kAbsent) : format_legal_basis(record.legal_basis.entries);
  w.decision = record.decisions.empty() ? std::string(kAbsent) : format_decisions(record.decisions);
  return w;
}

std::string worksheet_to_csv(const std::vector<WorksheetRow>& rows) {
  std::string out;
  const auto& cols = worksheet_columns();
  for (size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += "\n";
  for (const auto& r : rows) {
    const std::string fields[] = {r.ecli,          r.court,         std::to_string(r.year),
                                  r.birth_year,    r.legal_basis,   r.decision,
                                  r.manual_birth_year, r.manual_legal_basis, r.manual_decision};
    for (size_t i = 0; i < std::size(fields); ++i) out += (i ? "," : "") + dataset::csv_escape(fields[i]);
    out += "\n";
  }
  return out;
}

std::vector<WorksheetRow> worksheet_from_csv(std::string_view text) {
  auto table = dataset::parse_csv(text);
  if (table.empty()) throw ParseError("worksheet is empty");
  std::map<std::string, size_t> index;
  for (size_t i = 0; i < table[0].size(); ++i) index[std::string(trim(table[0][i]))] = i;
  for (const auto& c : worksheet_columns())
    if (!index.count(c)) throw ParseError("worksheet lacks column " + c, 1);
  std::vector<WorksheetRow> rows;
  for (size_t line = 1; line < table.size(); ++line) {
    const auto& f = table[line];
    if (f.size() == 1 && trim(f[0]).empty()) continue;
    auto get = [&](const std::string& name) -> std::string {
      size_t i = index[name];
      return i < f.size() ? f[i] : std::string();
    };
    WorksheetRow r;
    r.ecli = get("ecli");
    r.court = get("court");
    try {
      r.year = std::stoi(get("year"));
    } catch (const std::exception&) {
      throw ParseError("invalid year in worksheet", static_cast<long>(line + 1));
    }
    r.birth_year = get("birth_year");
    r.legal_basis = get("legal_basis");
    r.decision = get("decision");
    r.manual_birth_year = get("manual_birth_year");
    r.manual_legal_basis = get("manual_legal_basis");
    r.manual_decision = get("manual_decision");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ReliabilityTally> compare_worksheet(const std::vector<WorksheetRow>& rows, LegalBasisMatch mode) {
  std::vector<std::string> unfilled;
  for (const auto& r : rows)
    if (trim(r.manual_birth_year).empty() || trim(r.manual_legal_basis).empty() || trim(r.manual_decision).empty())
      unfilled.push_back(r.ecli);
  if (!unfilled.empty()) {
    std::string list;
    for (size_t i = 0; i < unfilled.size(); ++i) list += (i ? ", " : "") + unfilled[i];
    throw DataError(fmt::format("{} worksheet rows have empty manual cells: {}", unfilled.size(), list));
  }
  if (rows.empty()) throw DataError("worksheet has no rows");

  std::vector<ReliabilityTally> t(3);
  t[0].variable = "birth_year";
  t[1].variable = "legal_basis";
  t[2].variable = "decision";
  auto same = [](std::string_view a, std::string_view b) { return normalize_cell(a) == normalize_cell(b); };
  for (const auto& r : rows) {
    add(t[0], classify(r.birth_year, r.manual_birth_year, same));
    add(t[1], classify(r.legal_basis, r.manual_legal_basis,
                       [mode](std::string_view p, std::string_view m) { return legal_basis_equal(p, m, mode); }));
    add(t[2], classify(r.decision, r.manual_decision, same));
  }
  for (auto& x : t) {
    auto k = cohens_kappa(x.tp, x.fp, x.fn, x.tn);
    x.accuracy = k.accuracy;
    x.kappa = k.kappa;
  }
  return t;
}

}  // namespace judgcode::stats
