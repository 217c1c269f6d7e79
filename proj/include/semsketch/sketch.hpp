#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "semsketch/hierarchy.hpp"
#include "semsketch/index.hpp"
#include "semsketch/ingest.hpp"
#include "semsketch/model.hpp"

namespace semsketch {

// A provenance reference; `text` is empty until attach_examples resolves it.
struct Example {
  std::string sent_id;
  std::string text;
  std::int64_t core_token = 0;
  std::int64_t filler_token = 0;

  friend bool operator==(const Example&, const Example&) = default;
};

struct FillerEntry {
  std::string lemma;
  std::string semclass;
  std::uint64_t count = 0;
  double score = 0.0;
  std::vector<Example> examples;
  bool suspicious = false;

  friend bool operator==(const FillerEntry&, const FillerEntry&) = default;
};

struct Slot {
  std::string role;
  std::uint64_t link_count = 0;        // f(core, role, *)
  std::uint64_t distinct_fillers = 0;  // over the whole index, not the displayed prefix
  std::vector<FillerEntry> fillers;    // ranked by the active measure, descending
  bool sparse = false;
  bool narrow = false;

  friend bool operator==(const Slot&, const Slot&) = default;
};

struct Sketch {
  Lexeme lexeme;
  std::uint64_t total_links = 0;
  std::vector<Slot> slots;  // link_count descending, role ascending on ties
  Config config;

  const Slot* find_slot(std::string_view role) const;

  friend bool operator==(const Sketch&, const Sketch&) = default;
};

// FREQUENCY: f_joint. LOGDICE: 14 + log2(2 f_joint / (f_core_role + f_filler)).
// Throws E_DOMAIN unless 1 <= f_joint <= min(f_core_role, f_filler).
double score_filler(std::uint64_t f_joint, std::uint64_t f_core_role, std::uint64_t f_filler,
                    Measure measure);

// Filler order: score desc, count desc, lemma asc, semclass asc.
bool ranks_before(const FillerEntry& a, const FillerEntry& b);

// Sketch of one word sense, filler lists cut to config.top_fillers. SPARSE
// and NARROW slot flags are applied. Throws E_NOT_FOUND or
// BelowThresholdError.
Sketch build_sketch(const FrequencyIndex& index, const Lexeme& lexeme, const Config& config);

// As build_sketch but every slot keeps its complete ranked filler list; this
// is what stores persist and what paging reads from.
Sketch build_full_sketch(const FrequencyIndex& index, const Lexeme& lexeme, const Config& config);

// Keeps the first `top` fillers of every slot.
Sketch truncate_fillers(Sketch sketch, std::size_t top);

// Re-scores and re-sorts a full sketch under another measure using the
// language-wide filler totals. SUSPICIOUS flags are cleared.
Sketch rerank(Sketch full, Measure measure, const std::map<FillerKey, std::uint64_t>& filler_totals);

enum class SlotFlag { kSparse, kNarrow };

std::string_view slot_flag_name(SlotFlag flag);

struct SlotDiagnosis {
  std::string role;
  std::vector<SlotFlag> flags;
  std::vector<std::string> reasons;  // one per flag, citing the threshold

  bool has(SlotFlag flag) const;
};

struct Diagnostics {
  std::vector<SlotDiagnosis> slots;  // sketch slot order

  const SlotDiagnosis* find(std::string_view role) const;
};

// SPARSE: link_count < sparse_max_links. NARROW: link_count >=
// narrow_min_links and distinct_fillers <= narrow_max_distinct.
Diagnostics diagnose(const Sketch& sketch, const Config& config);
void apply_diagnostics(Sketch& sketch, const Diagnostics& diagnostics);

// A filler is SUSPICIOUS iff its count is 1 and its class neither equals nor
// descends from the class of any filler ranked above it in the slot. Classes
// missing from the hierarchy only match by equality. Ranking is untouched.
void flag_suspicious_fillers(Sketch& sketch, const SemanticHierarchy& hierarchy);

// Fills example text from the sentence table; unresolvable references are
// dropped. Returns the number dropped.
std::size_t attach_examples(Sketch& sketch, const SentenceTable& sentences);

}  // namespace semsketch
