#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semsketch/hierarchy.hpp"

namespace semsketch {

// ISO 639-1: exactly two lowercase ASCII letters.
bool is_language_code(std::string_view code);

// Any non-empty name without whitespace.
bool is_role_name(std::string_view role);

// A word sense: (language, lemma, semantic class). The lemma is stored in
// NFC, case preserved, so equality is byte-wise on normalized text.
struct Lexeme {
  std::string language;
  std::string lemma;
  std::string semclass;

  Lexeme() = default;
  Lexeme(std::string_view language, std::string_view lemma, std::string_view semclass);

  // "lemma:SEMCLASS"
  std::string label() const;

  friend auto operator<=>(const Lexeme&, const Lexeme&) = default;
  friend bool operator==(const Lexeme&, const Lexeme&) = default;
};

// "lang:lemma:SEMCLASS". Throws E_USAGE on malformed input.
Lexeme parse_lexeme_ref(std::string_view text);
std::string format_lexeme_ref(const Lexeme& lexeme);

// One semantic dependency occurrence of a filler on a verbal core.
struct LinkRecord {
  Lexeme core;
  std::string role;
  std::string filler_lemma;
  std::string filler_semclass;
  std::string sent_id;
  std::int64_t core_token = 0;
  std::int64_t filler_token = 0;

  const std::string& language() const { return core.language; }

  friend bool operator==(const LinkRecord&, const LinkRecord&) = default;
};

enum class ViolationKind {
  kUnknownClass,
  kEmptyLemma,
  kEmptyRole,
  kInvalidRole,
  kNegativeToken,
  kInvalidLanguage,
};

std::string_view violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string field;
  std::string detail;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

// Collects every violation; the record is never modified.
ValidationResult validate_link(const LinkRecord& record, const SemanticHierarchy& hierarchy);

enum class Measure { kFrequency, kLogDice };

std::string_view measure_name(Measure measure);  // "FREQUENCY" | "LOGDICE"
// Accepts "freq", "logdice" and the upper-case names.
std::optional<Measure> parse_measure(std::string_view text);

struct Config {
  static constexpr std::uint64_t kEnglishMinLinks = 200;
  static constexpr std::uint64_t kRussianMinLinks = 2000;

  std::uint64_t min_links = kEnglishMinLinks;
  std::uint64_t top_fillers = 8;
  std::optional<std::uint64_t> max_roles;
  Measure measure = Measure::kFrequency;
  std::uint64_t sparse_max_links = 10;
  std::uint64_t narrow_max_distinct = 4;
  std::uint64_t narrow_min_links = 50;

  // Throws E_USAGE when a positive field is zero.
  void validate() const;

  friend bool operator==(const Config&, const Config&) = default;
};

}  // namespace semsketch
