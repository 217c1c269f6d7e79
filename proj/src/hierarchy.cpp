#include "semsketch/hierarchy.hpp"

#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "semsketch/error.hpp"
#include "semsketch/io.hpp"
#include "semsketch/text.hpp"

namespace semsketch {

bool is_class_name(std::string_view name) {
  if (name.empty() || name.front() < 'A' || name.front() > 'Z') return false;
  for (char c : name) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

SemanticHierarchy SemanticHierarchy::from_classes(const std::vector<SemanticClass>& classes) {
  SemanticHierarchy h;
  std::map<std::string, std::vector<std::string>, std::less<>> children;
  for (const auto& c : classes) {
    if (!is_class_name(c.name)) {
      throw Error(ErrorCode::kFormat, "invalid class name '" + c.name + "'");
    }
    if (c.parent && !is_class_name(*c.parent)) {
      throw Error(ErrorCode::kFormat, "invalid parent name for '" + c.name + "'");
    }
    if (!h.parents_.emplace(c.name, c.parent.value_or("")).second) {
      throw Error(ErrorCode::kFormat, "duplicate class '" + c.name + "'");
    }
    if (!c.parent) {
      if (!h.root_.empty()) {
        throw Error(ErrorCode::kFormat,
                    "second root '" + c.name + "' (first was '" + h.root_ + "')");
      }
      h.root_ = c.name;
    } else {
      children[*c.parent].push_back(c.name);
    }
  }
  if (h.parents_.empty()) return h;
  if (h.root_.empty()) throw Error(ErrorCode::kFormat, "hierarchy has no root");

  for (const auto& [name, parent] : h.parents_) {
    if (!parent.empty() && !h.parents_.contains(parent)) {
      throw Error(ErrorCode::kFormat, "class '" + name + "' has unknown parent '" + parent + "'");
    }
  }

  // With one root and resolved parents, every class is reachable from the
  // root iff there is no cycle.
  std::size_t reached = 0;
  std::queue<std::string_view> frontier;
  frontier.push(h.root_);
  while (!frontier.empty()) {
    std::string_view name = frontier.front();
    frontier.pop();
    ++reached;
    if (auto it = children.find(name); it != children.end()) {
      for (const auto& child : it->second) frontier.push(child);
    }
  }
  if (reached != h.parents_.size()) {
    throw Error(ErrorCode::kFormat, "hierarchy contains a cycle");
  }

  Fnv1a digest;
  for (const auto& [name, parent] : h.parents_) {
    digest.update(name);
    digest.update("\t");
    digest.update(parent);
    digest.update("\n");
  }
  h.checksum_ = digest.hex();
  return h;
}

SemanticHierarchy SemanticHierarchy::parse_tsv(std::istream& in) {
  std::vector<SemanticClass> classes;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 2) {
      throw Error(ErrorCode::kFormat,
                  "hierarchy line " + std::to_string(line_no) + ": expected 2 columns");
    }
    SemanticClass c{std::string(fields[0]), std::nullopt};
    if (!fields[1].empty()) c.parent = std::string(fields[1]);
    classes.push_back(std::move(c));
  }
  return from_classes(classes);
}

SemanticHierarchy SemanticHierarchy::load(const std::string& path) {
  auto in = open_input(path);
  return parse_tsv(*in);
}

void SemanticHierarchy::write_tsv(std::ostream& out) const {
  for (const auto& [name, parent] : parents_) out << name << '\t' << parent << '\n';
}

bool SemanticHierarchy::contains(std::string_view name) const {
  return parents_.find(name) != parents_.end();
}

std::optional<std::string> SemanticHierarchy::parent_of(std::string_view name) const {
  auto it = parents_.find(name);
  if (it == parents_.end()) {
    throw Error(ErrorCode::kUnknownClass, "unknown class '" + std::string(name) + "'");
  }
  if (it->second.empty()) return std::nullopt;
  return it->second;
}

bool SemanticHierarchy::is_descendant(std::string_view name, std::string_view ancestor) const {
  auto it = parents_.find(name);
  if (it == parents_.end()) {
    throw Error(ErrorCode::kUnknownClass, "unknown class '" + std::string(name) + "'");
  }
  if (!contains(ancestor)) {
    throw Error(ErrorCode::kUnknownClass, "unknown class '" + std::string(ancestor) + "'");
  }
  while (true) {
    if (it->first == ancestor) return true;
    if (it->second.empty()) return false;
    it = parents_.find(it->second);
  }
}

std::vector<SemanticClass> SemanticHierarchy::classes() const {
  std::vector<SemanticClass> out;
  out.reserve(parents_.size());
  for (const auto& [name, parent] : parents_) {
    SemanticClass c{name, std::nullopt};
    if (!parent.empty()) c.parent = parent;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace semsketch
