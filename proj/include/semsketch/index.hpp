#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "semsketch/hierarchy.hpp"
#include "semsketch/ingest.hpp"
#include "semsketch/model.hpp"

namespace semsketch {

// Filler identity for counting: the same lemma under two classes is two
// fillers.
struct FillerKey {
  std::string lemma;
  std::string semclass;

  friend auto operator<=>(const FillerKey&, const FillerKey&) = default;
  friend bool operator==(const FillerKey&, const FillerKey&) = default;
};

struct SentenceRef {
  std::string sent_id;
  std::int64_t core_token = 0;
  std::int64_t filler_token = 0;

  friend bool operator==(const SentenceRef&, const SentenceRef&) = default;
};

struct JointCell {
  std::uint64_t count = 0;
  std::vector<SentenceRef> examples;  // first-come, at most the provenance cap

  friend bool operator==(const JointCell&, const JointCell&) = default;
};

struct RoleCell {
  std::uint64_t total = 0;  // f(core, role, *)
  std::map<FillerKey, JointCell> fillers;

  friend bool operator==(const RoleCell&, const RoleCell&) = default;
};

struct CoreCell {
  std::uint64_t total = 0;  // f(core, *, *)
  std::map<std::string, RoleCell, std::less<>> roles;

  friend bool operator==(const CoreCell&, const CoreCell&) = default;
};

struct LanguageTable {
  std::uint64_t total_links = 0;
  std::map<Lexeme, CoreCell> cores;
  std::map<FillerKey, std::uint64_t> filler_totals;  // f(*, *, filler)

  friend bool operator==(const LanguageTable&, const LanguageTable&) = default;
};

// Nested link counts per language: joint f(core, role, filler) plus the
// core-role, core and filler marginals, with bounded example provenance.
// Single writer while accumulating; immutable and shareable afterwards.
class FrequencyIndex {
 public:
  static constexpr std::size_t kDefaultProvenanceCap = 5;

  explicit FrequencyIndex(std::size_t provenance_cap = kDefaultProvenanceCap,
                          std::string hierarchy_checksum = {});

  void accumulate(const LinkRecord& record);

  // Adds `count` occurrences of one joint key along with retained examples;
  // used by merge and load.
  void add_joint(const Lexeme& core, std::string_view role, const FillerKey& filler,
                 std::uint64_t count, const std::vector<SentenceRef>& examples);

  const std::map<std::string, LanguageTable>& languages() const { return languages_; }
  std::vector<std::string> language_codes() const;

  const CoreCell* find_core(const Lexeme& core) const;
  std::uint64_t core_total(const Lexeme& core) const;
  std::uint64_t role_total(const Lexeme& core, std::string_view role) const;
  std::uint64_t joint(const Lexeme& core, std::string_view role, const FillerKey& filler) const;
  std::uint64_t filler_total(std::string_view language, const FillerKey& filler) const;
  std::uint64_t total_links() const { return total_links_; }

  std::size_t provenance_cap() const { return provenance_cap_; }
  const std::string& hierarchy_checksum() const { return hierarchy_checksum_; }

  // Count tables only; provenance and header ignored.
  bool same_counts(const FrequencyIndex& other) const;

  friend bool operator==(const FrequencyIndex&, const FrequencyIndex&) = default;

 private:
  std::size_t provenance_cap_;
  std::string hierarchy_checksum_;
  std::uint64_t total_links_ = 0;
  std::map<std::string, LanguageTable> languages_;
};

// Pointwise sum of counts; provenance is a's entries then b's, truncated to
// a's cap. Throws E_CHECKSUM when both sides carry different hierarchy
// checksums.
FrequencyIndex merge(const FrequencyIndex& a, const FrequencyIndex& b);

// Corpus statistics recovered from the count tables (parse_errors is 0).
CorpusStats index_stats(const FrequencyIndex& index);

// Lexemes with f(core, *, *) >= min_links, sorted by (language, lemma, semclass).
std::vector<Lexeme> eligible_lexemes(const FrequencyIndex& index, std::uint64_t min_links);

inline constexpr int kIndexFormatVersion = 1;

struct IndexHeader {
  int format_version = kIndexFormatVersion;
  std::string hierarchy_checksum;
  std::vector<std::string> languages;
  std::uint64_t record_count = 0;
  std::size_t provenance_cap = FrequencyIndex::kDefaultProvenanceCap;
};

// A persisted index travels with the hierarchy it was validated against and
// the sentence rows its provenance refers to.
struct IndexBundle {
  FrequencyIndex index;
  SemanticHierarchy hierarchy;
  SentenceTable sentences;
};

void persist_index(std::ostream& out, const FrequencyIndex& index,
                   const SemanticHierarchy& hierarchy = {}, const SentenceTable& sentences = {});

// Throws E_VERSION on a foreign or newer format, E_CHECKSUM when the embedded
// hierarchy or `expected_checksum` disagrees with the header, E_FORMAT on
// malformed rows.
IndexBundle load_index(std::istream& in,
                       const std::optional<std::string>& expected_checksum = std::nullopt);

IndexHeader read_index_header(std::istream& in);

void save_index_file(const std::string& path, const FrequencyIndex& index,
                     const SemanticHierarchy& hierarchy = {}, const SentenceTable& sentences = {});
IndexBundle load_index_file(const std::string& path,
                            const std::optional<std::string>& expected_checksum = std::nullopt);

// Subset of `table` referenced by retained provenance.
SentenceTable referenced_sentences(const FrequencyIndex& index, const SentenceTable& table);

}  // namespace semsketch
