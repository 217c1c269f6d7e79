#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semsketch/error.hpp"
#include "semsketch/model.hpp"

namespace semsketch {

// SLF v1: one link per line, nine tab-separated columns
//   lang  core_lemma  core_semclass  role  filler_lemma  filler_semclass
//   sent_id  core_token  filler_token
// '#' lines and blank lines are skipped. Fields cannot contain tabs or
// newlines; there is no escaping.
inline constexpr std::size_t kSlfColumns = 9;

struct ParseError {
  std::size_t line = 0;  // 1-based
  ErrorCode code = ErrorCode::kFormat;
  std::string message;
};

using ParseResult = std::variant<LinkRecord, ParseError>;

// Parses a single SLF line (no trailing newline). Format-level checks only:
// column count, token indices, UTF-8. Lemmas come back NFC-normalized.
ParseResult parse_link_line(std::string_view line, std::size_t line_no = 0);

// Single-pass reader: each non-comment, non-blank line yields exactly one
// LinkRecord or one ParseError; memory use is one line at a time.
class LinkReader {
 public:
  explicit LinkReader(std::istream& in) : in_(in) {}

  std::optional<ParseResult> next();
  std::size_t line_number() const { return line_no_; }

 private:
  std::istream& in_;
  std::string buffer_;
  std::size_t line_no_ = 0;
};

// Throws E_FORMAT when a field would break the line grammar.
std::string serialize_link(const LinkRecord& record);
void write_links(std::ostream& out, std::span<const LinkRecord> records);

struct SentenceEntry {
  std::string sent_id;
  std::string language;
  std::string text;

  friend bool operator==(const SentenceEntry&, const SentenceEntry&) = default;
};

using SentenceTable = std::map<std::string, SentenceEntry, std::less<>>;

struct SentenceTableResult {
  SentenceTable sentences;
  std::vector<ParseError> errors;  // E_FORMAT or E_DUP_SENT, in line order
};

// `sent_id<TAB>lang<TAB>text` rows. A duplicate id keeps the first row and
// records E_DUP_SENT for the later one.
SentenceTableResult parse_sentence_table(std::istream& in);
void write_sentence_table(std::ostream& out, const SentenceTable& table);

struct LanguageStats {
  std::uint64_t total_links = 0;
  std::uint64_t distinct_core_lexemes = 0;
  // link count -> number of core lexemes with exactly that many links
  std::map<std::uint64_t, std::uint64_t> links_per_lexeme;

  friend bool operator==(const LanguageStats&, const LanguageStats&) = default;
};

struct CorpusStats {
  std::map<std::string, LanguageStats> languages;
  std::uint64_t parse_errors = 0;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

class CorpusStatsBuilder {
 public:
  void add(const LinkRecord& record) { ++per_lexeme_[record.core]; }
  void add_parse_error() { ++parse_errors_; }
  CorpusStats finish() const;

 private:
  std::map<Lexeme, std::uint64_t> per_lexeme_;
  std::uint64_t parse_errors_ = 0;
};

CorpusStats corpus_stats(std::span<const LinkRecord> records);

}  // namespace semsketch
