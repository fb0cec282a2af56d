#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "judgcode/codebook.hpp"
#include "judgcode/document.hpp"
#include "judgcode/extract.hpp"

namespace judgcode::lint {

enum class Category { A_anonymization, S_spelling_consistency, V_legal_basis };
enum class Severity { error, warning };

std::string_view to_string(Category c);
std::string_view to_string(Severity s);
// "A", "S" or "V".
std::string_view short_name(Category c);

struct RuleInfo {
  std::string_view id;
  Category category;
  Severity severity;
};

// Every rule, in report order.
const std::vector<RuleInfo>& rules();
const RuleInfo* find_rule(std::string_view id);

struct LintIssue {
  std::string ecli;
  Category category = Category::A_anonymization;
  std::string rule;
  std::string excerpt;  // at most kMaxExcerpt bytes, whitespace collapsed
  Severity severity = Severity::warning;

  bool operator==(const LintIssue&) const = default;
};

inline constexpr size_t kMaxExcerpt = 120;

// Rule toggles ("<rule>\t<on|off>"); unlisted rules are on.
class RuleSet {
 public:
  static RuleSet parse(std::string_view tsv);
  static RuleSet load(const std::filesystem::path& path);  // empty path: compiled-in
  static RuleSet all();

  bool enabled(std::string_view rule) const;
  void set(std::string_view rule, bool on);

 private:
  std::map<std::string, bool, std::less<>> state_;
};

// Highest existing article number per statute.
class ArticleBounds {
 public:
  static ArticleBounds parse(std::string_view tsv);
  static const ArticleBounds& builtin();
  std::optional<long> last(std::string_view statute) const;

 private:
  std::map<std::string, long, std::less<>> last_;
};

struct LintOptions {
  RuleSet rules = RuleSet::all();
  const codebook::StatuteMaxTable* table = &codebook::StatuteMaxTable::builtin();
  const ArticleBounds* bounds = &ArticleBounds::builtin();
};

// Findings for one coded document, in rule order then text order. Reads only.
std::vector<LintIssue> lint_judgment(const JudgmentDocument& doc, const extract::CodedRecord& record,
                                     const LintOptions& options = {});

// Article citation that cannot exist: absent from the maxima table and beyond
// the statute's last article.
bool is_unknown_article(std::string_view statute, std::string_view article, const codebook::StatuteMaxTable& table,
                        const ArticleBounds& bounds);

bool luhn_valid(std::string_view digits);

struct LintReport {
  std::vector<LintIssue> issues;  // sorted by ECLI, then rule order
  std::map<Category, size_t> per_category;
  std::map<std::string, size_t> per_rule;
};

LintReport aggregate(std::vector<LintIssue> issues);

}  // namespace judgcode::lint
