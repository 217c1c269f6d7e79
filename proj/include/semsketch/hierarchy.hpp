#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semsketch {

struct SemanticClass {
  std::string name;
  std::optional<std::string> parent;  // absent for the root

  friend bool operator==(const SemanticClass&, const SemanticClass&) = default;
};

// Single-rooted tree of language-independent semantic classes. Immutable
// once built; construction rejects duplicates, dangling parents, a missing
// or second root, and cycles (E_FORMAT).
class SemanticHierarchy {
 public:
  SemanticHierarchy() = default;

  static SemanticHierarchy from_classes(const std::vector<SemanticClass>& classes);

  // `class_name<TAB>parent_name` rows; empty parent marks the root; '#' lines
  // and blank lines are skipped.
  static SemanticHierarchy parse_tsv(std::istream& in);
  static SemanticHierarchy load(const std::string& path);
  void write_tsv(std::ostream& out) const;

  bool empty() const { return parents_.empty(); }
  std::size_t size() const { return parents_.size(); }
  bool contains(std::string_view name) const;
  const std::string& root() const { return root_; }
  std::optional<std::string> parent_of(std::string_view name) const;

  // True iff `ancestor` equals `name` or lies on its parent chain.
  // Throws E_UNKNOWN_CLASS when either class is absent.
  bool is_descendant(std::string_view name, std::string_view ancestor) const;

  // Classes sorted by name.
  std::vector<SemanticClass> classes() const;

  // FNV-1a over the canonical sorted TSV; empty hierarchy yields "".
  const std::string& checksum() const { return checksum_; }

 private:
  std::map<std::string, std::string, std::less<>> parents_;  // root maps to ""
  std::string root_;
  std::string checksum_;
};

inline bool is_descendant(const SemanticHierarchy& hierarchy, std::string_view name,
                          std::string_view ancestor) {
  return hierarchy.is_descendant(name, ancestor);
}

bool is_class_name(std::string_view name);

}  // namespace semsketch
