#include "semsketch/contrastive.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "semsketch/error.hpp"
#include "semsketch/text.hpp"

namespace semsketch {

namespace {

using Distribution = std::map<std::string, std::uint64_t>;

std::set<std::string> role_names(const Sketch& sketch) {
  std::set<std::string> out;
  for (const auto& slot : sketch.slots) out.insert(slot.role);
  return out;
}

double cosine(const Distribution& a, const Distribution& b) {
  double dot = 0.0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  for (const auto& [cls, count] : a) {
    norm_a += static_cast<double>(count) * static_cast<double>(count);
    if (auto it = b.find(cls); it != b.end()) {
      dot += static_cast<double>(count) * static_cast<double>(it->second);
    }
  }
  for (const auto& [cls, count] : b) {
    norm_b += static_cast<double>(count) * static_cast<double>(count);
  }
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  return dot / (std::sqrt(norm_a) * std::sqrt(norm_b));
}

// Weighted Jaccard over class proportions, so slots from corpora of
// different sizes compare on shape rather than volume.
double weighted_jaccard(const Distribution& a, const Distribution& b) {
  double total_a = 0.0;
  double total_b = 0.0;
  for (const auto& [cls, n] : a) total_a += static_cast<double>(n);
  for (const auto& [cls, n] : b) total_b += static_cast<double>(n);
  if (total_a == 0.0 && total_b == 0.0) return 1.0;
  auto share = [](const Distribution& d, const std::string& cls, double total) {
    auto it = d.find(cls);
    return it == d.end() || total == 0.0 ? 0.0 : static_cast<double>(it->second) / total;
  };
  std::set<std::string> classes;
  for (const auto& [cls, n] : a) classes.insert(cls);
  for (const auto& [cls, n] : b) classes.insert(cls);
  double mins = 0.0;
  double maxs = 0.0;
  for (const auto& cls : classes) {
    double pa = share(a, cls, total_a);
    double pb = share(b, cls, total_b);
    mins += std::min(pa, pb);
    maxs += std::max(pa, pb);
  }
  return maxs == 0.0 ? 1.0 : mins / maxs;
}

std::vector<std::string> keys_missing_from(const Distribution& from, const Distribution& other) {
  std::vector<std::string> out;
  for (const auto& [cls, count] : from) {
    if (!other.contains(cls)) out.push_back(cls);
  }
  return out;
}

}  // namespace

std::map<std::string, std::uint64_t> class_distribution(const Slot& slot) {
  Distribution out;
  for (const auto& filler : slot.fillers) out[filler.semclass] += filler.count;
  return out;
}

double affinity(const Sketch& left, const Sketch& right, const AffinityWeights& weights) {
  if (left.slots.empty() || right.slots.empty()) {
    throw Error(ErrorCode::kEmpty, "affinity needs two sketches with at least one slot");
  }
  auto lroles = role_names(left);
  auto rroles = role_names(right);
  std::vector<std::string> shared;
  std::set_intersection(lroles.begin(), lroles.end(), rroles.begin(), rroles.end(),
                        std::back_inserter(shared));
  std::size_t union_size = lroles.size() + rroles.size() - shared.size();
  double jaccard = static_cast<double>(shared.size()) / static_cast<double>(union_size);

  double filler_term = 0.0;
  if (!shared.empty()) {
    double sum = 0.0;
    for (const auto& role : shared) {
      sum += cosine(class_distribution(*left.find_slot(role)),
                    class_distribution(*right.find_slot(role)));
    }
    filler_term = sum / static_cast<double>(shared.size());
  }
  return weights.roles * jaccard + weights.fillers * filler_term;
}

std::vector<SketchPair> pair_by_class(const SketchSet& left, const SketchSet& right,
                                      const AffinityWeights& weights) {
  std::vector<SketchPair> pairs;
  for (const auto& l : left) {
    for (const auto& r : right) {
      if (l->lexeme.semclass != r->lexeme.semclass) continue;
      if (l->lexeme.language == r->lexeme.language) continue;
      pairs.push_back({l, r, l->lexeme.semclass, affinity(*l, *r, weights)});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const SketchPair& a, const SketchPair& b) {
    return std::tie(a.semclass, a.left->lexeme.lemma, a.right->lexeme.lemma,
                    a.left->lexeme.language, a.right->lexeme.language) <
           std::tie(b.semclass, b.left->lexeme.lemma, b.right->lexeme.lemma,
                    b.left->lexeme.language, b.right->lexeme.language);
  });
  return pairs;
}

std::string_view side_name(Side side) { return side == Side::kLeft ? "left" : "right"; }

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::kRoleGap: return "ROLE_GAP";
    case Verdict::kFillerDivergence: return "FILLER_DIVERGENCE";
    case Verdict::kNone: return "NONE";
  }
  return "NONE";
}

bool DiffReport::has(Verdict verdict) const {
  return std::find(verdicts.begin(), verdicts.end(), verdict) != verdicts.end();
}

DiffReport diff(const Sketch& left, const Sketch& right, double divergence_threshold) {
  DiffReport report;
  auto lroles = role_names(left);
  auto rroles = role_names(right);

  std::set<std::string> all(lroles);
  all.insert(rroles.begin(), rroles.end());
  bool divergent = false;
  for (const auto& role : all) {
    const Slot* ls = left.find_slot(role);
    const Slot* rs = right.find_slot(role);
    if (ls && rs) {
      auto ld = class_distribution(*ls);
      auto rd = class_distribution(*rs);
      SharedRole shared{role, weighted_jaccard(ld, rd), keys_missing_from(ld, rd),
                        keys_missing_from(rd, ld)};
      divergent = divergent || shared.class_overlap < divergence_threshold;
      report.shared_roles.push_back(std::move(shared));
    } else if (ls) {
      report.role_gaps.push_back({role, Side::kLeft, ls->link_count});
    } else {
      report.role_gaps.push_back({role, Side::kRight, rs->link_count});
    }
  }
  if (!report.role_gaps.empty()) report.verdicts.push_back(Verdict::kRoleGap);
  if (divergent) report.verdicts.push_back(Verdict::kFillerDivergence);
  if (report.verdicts.empty()) report.verdicts.push_back(Verdict::kNone);
  return report;
}

DiffReport diff(const SketchPair& pair, double divergence_threshold) {
  return diff(*pair.left, *pair.right, divergence_threshold);
}

const LanguageField* FieldReport::find_language(std::string_view code) const {
  for (const auto& lang : languages) {
    if (lang.language == code) return &lang;
  }
  return nullptr;
}

const ClassCoverage* FieldReport::find_class(std::string_view filler_class) const {
  for (const auto& c : partition) {
    if (c.filler_class == filler_class) return &c;
  }
  return nullptr;
}

FieldReport field_structure_report(std::string_view semclass, const SketchSet& left,
                                   const SketchSet& right, std::string_view role) {
  FieldReport report;
  report.semclass = std::string(semclass);
  report.role = std::string(role);

  std::map<std::string, std::vector<FieldMember>> by_language;
  for (const SketchSet* side : {&left, &right}) {
    bool any = false;
    for (const auto& sketch : *side) {
      if (sketch->lexeme.semclass != semclass) continue;
      any = true;
      FieldMember member;
      member.lexeme = sketch->lexeme;
      if (const Slot* slot = sketch->find_slot(role)) {
        member.link_count = slot->link_count;
        member.distribution = class_distribution(*slot);
      }
      by_language[sketch->lexeme.language].push_back(std::move(member));
    }
    if (!any) {
      throw Error(ErrorCode::kEmptyClass, std::string(side == &left ? "left" : "right") +
                                              " side has no sketch in class " +
                                              std::string(semclass));
    }
  }

  std::map<std::string, ClassCoverage> coverage;
  for (auto& [code, members] : by_language) {
    std::sort(members.begin(), members.end(), [](const FieldMember& a, const FieldMember& b) {
      return a.lexeme < b.lexeme;
    });
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (const auto& member : members) {
      for (const auto& [cls, count] : member.distribution) {
        auto& entry = coverage[cls];
        entry.filler_class = cls;
        entry.lemmas[code].push_back(member.lexeme.lemma);
      }
    }
    report.languages.push_back({code, members});
  }
  for (auto& [cls, entry] : coverage) report.partition.push_back(std::move(entry));
  return report;
}

std::vector<std::pair<Lexeme, Lexeme>> parse_curated_pairs(std::istream& in) {
  std::vector<std::pair<Lexeme, Lexeme>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto f = split_tabs(line);
    if (f.size() != 6) {
      throw Error(ErrorCode::kFormat,
                  "curated line " + std::to_string(line_no) + ": expected 6 columns");
    }
    out.emplace_back(Lexeme(f[0], f[1], f[2]), Lexeme(f[3], f[4], f[5]));
  }
  return out;
}

std::vector<SketchPair> filter_curated(const std::vector<SketchPair>& pairs,
                                       const std::vector<std::pair<Lexeme, Lexeme>>& curated) {
  std::set<std::pair<Lexeme, Lexeme>> wanted(curated.begin(), curated.end());
  std::vector<SketchPair> out;
  for (const auto& pair : pairs) {
    if (wanted.contains({pair.left->lexeme, pair.right->lexeme})) out.push_back(pair);
  }
  return out;
}

}  // namespace semsketch
