#include "semsketch/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "semsketch/error.hpp"

namespace semsketch {

namespace {

std::vector<FillerEntry> rank_role(const RoleCell& role, const LanguageTable& language,
                                   Measure measure) {
  std::vector<FillerEntry> out;
  out.reserve(role.fillers.size());
  for (const auto& [key, cell] : role.fillers) {
    FillerEntry entry;
    entry.lemma = key.lemma;
    entry.semclass = key.semclass;
    entry.count = cell.count;
    entry.score = score_filler(cell.count, role.total, language.filler_totals.at(key), measure);
    for (const auto& ref : cell.examples) {
      entry.examples.push_back({ref.sent_id, {}, ref.core_token, ref.filler_token});
    }
    out.push_back(std::move(entry));
  }
  std::sort(out.begin(), out.end(), ranks_before);
  return out;
}

void order_slots(std::vector<Slot>& slots) {
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
    if (a.link_count != b.link_count) return a.link_count > b.link_count;
    return a.role < b.role;
  });
}

Sketch build(const FrequencyIndex& index, const Lexeme& lexeme, const Config& config,
             bool full) {
  config.validate();
  auto lang = index.languages().find(lexeme.language);
  const CoreCell* core = index.find_core(lexeme);
  if (core == nullptr) {
    throw Error(ErrorCode::kNotFound, "lexeme " + format_lexeme_ref(lexeme) + " not in index");
  }
  if (core->total < config.min_links) throw BelowThresholdError(core->total, config.min_links);

  Sketch sketch;
  sketch.lexeme = lexeme;
  sketch.total_links = core->total;
  sketch.config = config;
  for (const auto& [role_name, role] : core->roles) {
    Slot slot;
    slot.role = role_name;
    slot.link_count = role.total;
    slot.distinct_fillers = role.fillers.size();
    slot.fillers = rank_role(role, lang->second, config.measure);
    if (!full && slot.fillers.size() > config.top_fillers) slot.fillers.resize(config.top_fillers);
    sketch.slots.push_back(std::move(slot));
  }
  order_slots(sketch.slots);
  if (config.max_roles && sketch.slots.size() > *config.max_roles) {
    sketch.slots.resize(*config.max_roles);
  }
  apply_diagnostics(sketch, diagnose(sketch, config));
  return sketch;
}

}  // namespace

const Slot* Sketch::find_slot(std::string_view role) const {
  auto it = std::find_if(slots.begin(), slots.end(),
                         [role](const Slot& slot) { return slot.role == role; });
  return it == slots.end() ? nullptr : &*it;
}

double score_filler(std::uint64_t f_joint, std::uint64_t f_core_role, std::uint64_t f_filler,
                    Measure measure) {
  if (f_joint < 1 || f_core_role < f_joint || f_filler < f_joint) {
    throw Error(ErrorCode::kDomain,
                "score_filler needs 1 <= f_joint <= f_core_role, f_filler (got " +
                    std::to_string(f_joint) + ", " + std::to_string(f_core_role) + ", " +
                    std::to_string(f_filler) + ")");
  }
  if (measure == Measure::kFrequency) return static_cast<double>(f_joint);
  double ratio = 2.0 * static_cast<double>(f_joint) /
                 (static_cast<double>(f_core_role) + static_cast<double>(f_filler));
  return 14.0 + std::log2(ratio);
}

bool ranks_before(const FillerEntry& a, const FillerEntry& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.count != b.count) return a.count > b.count;
  if (a.lemma != b.lemma) return a.lemma < b.lemma;
  return a.semclass < b.semclass;
}

Sketch build_sketch(const FrequencyIndex& index, const Lexeme& lexeme, const Config& config) {
  return build(index, lexeme, config, false);
}

Sketch build_full_sketch(const FrequencyIndex& index, const Lexeme& lexeme,
                         const Config& config) {
  return build(index, lexeme, config, true);
}

Sketch truncate_fillers(Sketch sketch, std::size_t top) {
  for (auto& slot : sketch.slots) {
    if (slot.fillers.size() > top) slot.fillers.resize(top);
  }
  return sketch;
}

Sketch rerank(Sketch full, Measure measure,
              const std::map<FillerKey, std::uint64_t>& filler_totals) {
  full.config.measure = measure;
  for (auto& slot : full.slots) {
    for (auto& filler : slot.fillers) {
      auto it = filler_totals.find(FillerKey{filler.lemma, filler.semclass});
      if (it == filler_totals.end()) {
        throw Error(ErrorCode::kNotFound, "no filler total for " + filler.lemma + ":" +
                                              filler.semclass);
      }
      filler.score = score_filler(filler.count, slot.link_count, it->second, measure);
      filler.suspicious = false;
    }
    std::sort(slot.fillers.begin(), slot.fillers.end(), ranks_before);
  }
  return full;
}

std::string_view slot_flag_name(SlotFlag flag) {
  return flag == SlotFlag::kSparse ? "SPARSE" : "NARROW";
}

bool SlotDiagnosis::has(SlotFlag flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

const SlotDiagnosis* Diagnostics::find(std::string_view role) const {
  auto it = std::find_if(slots.begin(), slots.end(),
                         [role](const SlotDiagnosis& d) { return d.role == role; });
  return it == slots.end() ? nullptr : &*it;
}

Diagnostics diagnose(const Sketch& sketch, const Config& config) {
  Diagnostics out;
  for (const auto& slot : sketch.slots) {
    SlotDiagnosis d;
    d.role = slot.role;
    if (slot.link_count < config.sparse_max_links) {
      d.flags.push_back(SlotFlag::kSparse);
      d.reasons.push_back("link_count " + std::to_string(slot.link_count) +
                          " < sparse_max_links " + std::to_string(config.sparse_max_links));
    }
    if (slot.link_count >= config.narrow_min_links &&
        slot.distinct_fillers <= config.narrow_max_distinct) {
      d.flags.push_back(SlotFlag::kNarrow);
      d.reasons.push_back("link_count " + std::to_string(slot.link_count) +
                          " >= narrow_min_links " + std::to_string(config.narrow_min_links) +
                          " with distinct_fillers " + std::to_string(slot.distinct_fillers) +
                          " <= narrow_max_distinct " +
                          std::to_string(config.narrow_max_distinct));
    }
    out.slots.push_back(std::move(d));
  }
  return out;
}

void apply_diagnostics(Sketch& sketch, const Diagnostics& diagnostics) {
  for (auto& slot : sketch.slots) {
    const SlotDiagnosis* d = diagnostics.find(slot.role);
    slot.sparse = d != nullptr && d->has(SlotFlag::kSparse);
    slot.narrow = d != nullptr && d->has(SlotFlag::kNarrow);
  }
}

void flag_suspicious_fillers(Sketch& sketch, const SemanticHierarchy& hierarchy) {
  for (auto& slot : sketch.slots) {
    std::set<std::string, std::less<>> seen;
    for (auto& filler : slot.fillers) {
      bool covered = seen.contains(filler.semclass);
      if (!covered && hierarchy.contains(filler.semclass)) {
        for (auto parent = hierarchy.parent_of(filler.semclass); parent && !covered;
             parent = hierarchy.parent_of(*parent)) {
          covered = seen.contains(*parent);
        }
      }
      filler.suspicious = filler.count == 1 && !covered;
      seen.insert(filler.semclass);
    }
  }
}

std::size_t attach_examples(Sketch& sketch, const SentenceTable& sentences) {
  std::size_t dropped = 0;
  for (auto& slot : sketch.slots) {
    for (auto& filler : slot.fillers) {
      std::vector<Example> resolved;
      for (auto& example : filler.examples) {
        auto it = sentences.find(example.sent_id);
        if (it == sentences.end()) {
          ++dropped;
          continue;
        }
        example.text = it->second.text;
        resolved.push_back(std::move(example));
      }
      filler.examples = std::move(resolved);
    }
  }
  return dropped;
}

}  // namespace semsketch
