#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semsketch/sketch.hpp"

namespace semsketch {

using SketchPtr = std::shared_ptr<const Sketch>;
using SketchSet = std::vector<SketchPtr>;

// Cross-language comparison always goes through filler semantic classes,
// never lemmas: classes are the only thing two languages share.

struct AffinityWeights {
  double roles = 0.5;    // Jaccard of role-name sets
  double fillers = 0.5;  // mean cosine of per-role filler-class vectors
};

struct SketchPair {
  SketchPtr left;
  SketchPtr right;
  std::string semclass;
  double affinity = 0.0;
};

// Filler counts of one slot summed per filler semantic class.
std::map<std::string, std::uint64_t> class_distribution(const Slot& slot);

// Symmetric in its arguments. Throws E_EMPTY if either sketch has no slots.
double affinity(const Sketch& left, const Sketch& right, const AffinityWeights& weights = {});

// Every (left, right) combination sharing a semantic class and differing in
// language, sorted by (semclass, left lemma, right lemma), affinity filled in.
std::vector<SketchPair> pair_by_class(const SketchSet& left, const SketchSet& right,
                                      const AffinityWeights& weights = {});

enum class Side { kLeft, kRight };
std::string_view side_name(Side side);

struct RoleGap {
  std::string role;
  Side side = Side::kLeft;  // the side that has the role
  std::uint64_t link_count = 0;

  friend bool operator==(const RoleGap&, const RoleGap&) = default;
};

struct SharedRole {
  std::string role;
  double class_overlap = 1.0;  // weighted Jaccard of filler-class proportions
  std::vector<std::string> left_only_classes;
  std::vector<std::string> right_only_classes;

  friend bool operator==(const SharedRole&, const SharedRole&) = default;
};

enum class Verdict { kRoleGap, kFillerDivergence, kNone };
std::string_view verdict_name(Verdict verdict);

struct DiffReport {
  std::vector<RoleGap> role_gaps;        // role ascending
  std::vector<SharedRole> shared_roles;  // role ascending
  std::vector<Verdict> verdicts;         // {NONE} or a subset of {ROLE_GAP, FILLER_DIVERGENCE}

  bool has(Verdict verdict) const;

  friend bool operator==(const DiffReport&, const DiffReport&) = default;
};

inline constexpr double kDefaultDivergenceThreshold = 0.5;

DiffReport diff(const Sketch& left, const Sketch& right,
                double divergence_threshold = kDefaultDivergenceThreshold);
DiffReport diff(const SketchPair& pair,
                double divergence_threshold = kDefaultDivergenceThreshold);

struct FieldMember {
  Lexeme lexeme;
  std::uint64_t link_count = 0;  // of the inspected role; 0 when absent
  std::map<std::string, std::uint64_t> distribution;

  friend bool operator==(const FieldMember&, const FieldMember&) = default;
};

struct LanguageField {
  std::string language;
  std::vector<FieldMember> members;  // lemma ascending

  friend bool operator==(const LanguageField&, const LanguageField&) = default;
};

struct ClassCoverage {
  std::string filler_class;
  std::map<std::string, std::vector<std::string>> lemmas;  // language -> covering lemmas

  friend bool operator==(const ClassCoverage&, const ClassCoverage&) = default;
};

struct FieldReport {
  std::string semclass;
  std::string role;
  std::vector<LanguageField> languages;  // language ascending
  std::vector<ClassCoverage> partition;  // filler class ascending

  const LanguageField* find_language(std::string_view code) const;
  const ClassCoverage* find_class(std::string_view filler_class) const;

  friend bool operator==(const FieldReport&, const FieldReport&) = default;
};

// How the member verbs of one class split the filler-class space of `role`.
// Throws E_EMPTY_CLASS if either side has no sketch in the class.
FieldReport field_structure_report(std::string_view semclass, const SketchSet& left,
                                   const SketchSet& right, std::string_view role = "Object");

// Curation list: `lang lemma SEMCLASS lang lemma SEMCLASS` TSV rows, '#'
// comments allowed. Throws E_FORMAT.
std::vector<std::pair<Lexeme, Lexeme>> parse_curated_pairs(std::istream& in);

// Keeps pairs named by the curation list, in their original order.
std::vector<SketchPair> filter_curated(const std::vector<SketchPair>& pairs,
                                       const std::vector<std::pair<Lexeme, Lexeme>>& curated);

}  // namespace semsketch
