#include "semsketch/model.hpp"

#include <algorithm>

#include "semsketch/error.hpp"
#include "semsketch/text.hpp"

namespace semsketch {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

bool is_language_code(std::string_view code) {
  return code.size() == 2 &&
         std::all_of(code.begin(), code.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

bool is_role_name(std::string_view role) {
  return !role.empty() && std::none_of(role.begin(), role.end(), is_space);
}

Lexeme::Lexeme(std::string_view language, std::string_view lemma, std::string_view semclass)
    : language(language), lemma(nfc_or_throw(lemma)), semclass(semclass) {}

std::string Lexeme::label() const { return lemma + ":" + semclass; }

Lexeme parse_lexeme_ref(std::string_view text) {
  auto first = text.find(':');
  auto last = text.rfind(':');
  if (first == std::string_view::npos || first == last) {
    throw Error(ErrorCode::kUsage,
                "lexeme must look like lang:lemma:SEMCLASS, got '" + std::string(text) + "'");
  }
  auto language = text.substr(0, first);
  auto lemma = text.substr(first + 1, last - first - 1);
  auto semclass = text.substr(last + 1);
  if (!is_language_code(language) || lemma.empty() || !is_class_name(semclass)) {
    throw Error(ErrorCode::kUsage, "malformed lexeme '" + std::string(text) + "'");
  }
  auto normalized = normalize_nfc(lemma);
  if (!normalized) throw Error(ErrorCode::kUsage, "lexeme lemma is not UTF-8");
  return Lexeme(language, *normalized, semclass);
}

std::string format_lexeme_ref(const Lexeme& lexeme) {
  return lexeme.language + ":" + lexeme.lemma + ":" + lexeme.semclass;
}

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUnknownClass: return "UNKNOWN_CLASS";
    case ViolationKind::kEmptyLemma: return "EMPTY_LEMMA";
    case ViolationKind::kEmptyRole: return "EMPTY_ROLE";
    case ViolationKind::kInvalidRole: return "INVALID_ROLE";
    case ViolationKind::kNegativeToken: return "NEGATIVE_TOKEN";
    case ViolationKind::kInvalidLanguage: return "INVALID_LANGUAGE";
  }
  return "UNKNOWN";
}

bool ValidationResult::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

ValidationResult validate_link(const LinkRecord& record, const SemanticHierarchy& hierarchy) {
  ValidationResult result;
  auto add = [&](ViolationKind kind, std::string field, std::string detail) {
    result.violations.push_back({kind, std::move(field), std::move(detail)});
  };

  if (!is_language_code(record.core.language)) {
    add(ViolationKind::kInvalidLanguage, "language", "'" + record.core.language + "'");
  }
  if (record.core.lemma.empty()) add(ViolationKind::kEmptyLemma, "core_lemma", "");
  if (record.filler_lemma.empty()) add(ViolationKind::kEmptyLemma, "filler_lemma", "");
  if (!hierarchy.contains(record.core.semclass)) {
    add(ViolationKind::kUnknownClass, "core_semclass", "'" + record.core.semclass + "'");
  }
  if (!hierarchy.contains(record.filler_semclass)) {
    add(ViolationKind::kUnknownClass, "filler_semclass", "'" + record.filler_semclass + "'");
  }
  if (record.role.empty()) {
    add(ViolationKind::kEmptyRole, "role", "");
  } else if (!is_role_name(record.role)) {
    add(ViolationKind::kInvalidRole, "role", "'" + record.role + "' contains whitespace");
  }
  if (record.core_token < 0) {
    add(ViolationKind::kNegativeToken, "core_token", std::to_string(record.core_token));
  }
  if (record.filler_token < 0) {
    add(ViolationKind::kNegativeToken, "filler_token", std::to_string(record.filler_token));
  }
  return result;
}

std::string_view measure_name(Measure measure) {
  return measure == Measure::kFrequency ? "FREQUENCY" : "LOGDICE";
}

std::optional<Measure> parse_measure(std::string_view text) {
  if (text == "freq" || text == "FREQUENCY") return Measure::kFrequency;
  if (text == "logdice" || text == "LOGDICE") return Measure::kLogDice;
  return std::nullopt;
}

void Config::validate() const {
  if (top_fillers == 0) throw Error(ErrorCode::kUsage, "top_fillers must be positive");
  if (max_roles && *max_roles == 0) throw Error(ErrorCode::kUsage, "max_roles must be positive");
  if (narrow_max_distinct == 0) {
    throw Error(ErrorCode::kUsage, "narrow_max_distinct must be positive");
  }
  if (narrow_min_links == 0) throw Error(ErrorCode::kUsage, "narrow_min_links must be positive");
}

}  // namespace semsketch
