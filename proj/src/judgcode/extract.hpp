#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "judgcode/dictionaries.hpp"
#include "judgcode/document.hpp"
#include "judgcode/quantity.hpp"

namespace judgcode::extract {

enum class BirthCountry { domestic, foreign, missing };
enum class Sex { male, female };
enum class Recidivism { first_offender, repeat_offender, missing };
enum class DecisionKind { measure, incarceration, community_service, fine, acquittal, procedural };
enum class DecisionStatus { coded, not_codable, missing };

std::string_view to_string(DecisionKind k);
std::string_view to_string(DecisionStatus s);

struct Decision {
  DecisionKind kind = DecisionKind::procedural;
  std::optional<double> amount;  // > 0 when present
  Unit unit = Unit::none;
  bool inconsistent = false;
  bool life = false;  // life imprisonment, coded as 360 months

  bool operator==(const Decision&) const = default;
};

struct StatuteArticles {
  std::string statute;  // identifier, verbatim name for unknown statutes, "" when none was given
  std::vector<std::string> articles;
  bool operator==(const StatuteArticles&) const = default;
};

enum class LegalBasisIssue { articles_without_statute, statute_without_articles, unknown_statute };
std::string_view to_string(LegalBasisIssue i);

struct LegalBasisFinding {
  LegalBasisIssue issue;
  std::string detail;
  bool operator==(const LegalBasisFinding&) const = default;
};

struct LegalBasis {
  bool chapter_found = false;
  std::vector<StatuteArticles> entries;
  std::vector<LegalBasisFinding> findings;
};

struct OffenderProfile {
  std::optional<int> birth_year;
  std::optional<int> raw_birth_year;  // as stated, even when implausible
  BirthCountry birth_country = BirthCountry::missing;
  Sex sex = Sex::male;
};

struct LegalInfo {
  Recidivism recidivism = Recidivism::missing;
  std::optional<int> co_offender_count;
  std::optional<int> victim_count;
};

struct ProsecutionInfo {
  std::vector<std::string> expertise;
  std::vector<std::string> detection_methods;
  bool guidelines_mentioned = false;
};

struct CodedRecord {
  JudgmentMeta meta;
  bool empty_body = false;
  OffenderProfile offender;
  LegalInfo legal;
  std::vector<std::string> investigations;  // named investigations ("Onderzoek")
  std::vector<std::string> basic_tech_terms;
  std::vector<std::string> special_tech_terms;
  ProsecutionInfo prosecution;
  LegalBasis legal_basis;
  std::vector<Decision> decisions;
  DecisionStatus decision_status = DecisionStatus::missing;
  bool large_scale_mentioned = false;

  const Decision* first_decision() const { return decisions.empty() ? nullptr : &decisions.front(); }
};

OffenderProfile extract_offender_profile(const JudgmentDocument& doc, const Dictionaries& dict = Dictionaries::builtin());
LegalInfo extract_legal_info(const JudgmentDocument& doc, const Dictionaries& dict = Dictionaries::builtin());
// {basic, special}
std::pair<std::vector<std::string>, std::vector<std::string>> extract_tech_terms(
    const JudgmentDocument& doc, const Dictionaries& dict = Dictionaries::builtin());
ProsecutionInfo extract_prosecution_info(const JudgmentDocument& doc, const Dictionaries& dict = Dictionaries::builtin());
std::vector<std::string> extract_investigations(const JudgmentDocument& doc);

// Parses a legal-basis passage.
LegalBasis parse_legal_basis(std::string_view text, const StatuteAliases& aliases);
LegalBasis extract_legal_basis(const JudgmentDocument& doc, const Dictionaries& dict = Dictionaries::builtin());

// Decisions in a decision passage, in textual order.
std::vector<Decision> parse_decisions(std::string_view text);
std::pair<std::vector<Decision>, DecisionStatus> extract_decision(const JudgmentDocument& doc);

// Composes all extractors. Segments the document if it has no chapters yet.
CodedRecord code_judgment(const JudgmentDocument& doc, const Dictionaries& dict = Dictionaries::builtin());

// Placeholder indices such as "[slachtoffer 3]": the highest index over the
// given labels, 1 for an unnumbered placeholder, nullopt when none occurs.
std::optional<int> max_placeholder_index(std::string_view text, const std::vector<std::string_view>& labels);

}  // namespace judgcode::extract
