#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semsketch/contrastive.hpp"
#include "semsketch/hierarchy.hpp"
#include "semsketch/index.hpp"
#include "semsketch/sketch.hpp"

namespace semsketch {

inline constexpr int kStoreFormatVersion = 1;

// A persisted pair: the two addressed sketches, their affinity and diff.
struct PairRecord {
  Lexeme left;
  Lexeme right;
  std::string semclass;
  double affinity = 0.0;
  DiffReport diff;

  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

PairRecord make_pair_record(const SketchPair& pair,
                            double divergence_threshold = kDefaultDivergenceThreshold);

// Everything a store holds. Sketches are full-width (complete ranked filler
// lists) so that readers can page and re-rank; filler_totals carries the
// language-wide f(*, *, filler) needed to re-score under another measure.
struct SketchSetData {
  std::string hierarchy_checksum;
  SemanticHierarchy hierarchy;  // may be empty
  std::map<std::string, Config> build_configs;  // per language
  std::map<Lexeme, SketchPtr> sketches;
  std::vector<PairRecord> pairs;  // sorted by (semclass, left lemma, right lemma)
  std::map<std::string, std::map<FillerKey, std::uint64_t>> filler_totals;

  void add(Sketch sketch) {
    auto key = sketch.lexeme;
    sketches[key] = std::make_shared<const Sketch>(std::move(sketch));
  }
  SketchPtr find(const Lexeme& lexeme) const;
  SketchSet sketches_for(const std::string& language) const;
  std::vector<std::string> languages() const;
};

struct Manifest {
  int format_version = kStoreFormatVersion;
  std::string hierarchy_checksum;
  std::vector<std::string> languages;
  std::map<std::string, std::uint64_t> sketch_counts;
  std::map<std::string, Config> build_configs;
  std::uint64_t pair_count = 0;
  std::string content_digest;
};

// Layout under the store root:
//   manifest.json            written last, via temp file + rename
//   hierarchy.tsv            optional
//   sketches/<lang>/<lemma>@<SEMCLASS>.json   percent-encoded segments
//   fillers/<lang>.tsv       lemma, semclass, f(*, *, filler)
//   pairs.json
void save_sketch_set(const std::filesystem::path& root, const SketchSetData& data);

// Loads all or nothing. E_IO for unreadable files, E_VERSION for a missing
// or foreign manifest version, E_CHECKSUM for hierarchy or content mismatch.
SketchSetData load_sketch_set(const std::filesystem::path& root,
                              const std::optional<std::string>& expected_checksum = std::nullopt);

Manifest read_manifest(const std::filesystem::path& root);

// Relative path of a sketch file; distinct lexemes never collide.
std::filesystem::path sketch_path(const Lexeme& lexeme);

// Restricts the language-wide filler totals to fillers that appear in
// `sketches`.
std::map<std::string, std::map<FillerKey, std::uint64_t>> collect_filler_totals(
    const FrequencyIndex& index, const std::map<Lexeme, SketchPtr>& sketches);

}  // namespace semsketch
