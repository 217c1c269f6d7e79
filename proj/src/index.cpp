#include "semsketch/index.hpp"

#include <fstream>
#include <sstream>

#include "semsketch/error.hpp"
#include "semsketch/io.hpp"
#include "semsketch/text.hpp"

namespace semsketch {

namespace {

constexpr std::string_view kMagic = "SEMSKETCH_INDEX";
constexpr std::string_view kEndHeader = "end_header";

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split_commas(std::string_view text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.emplace_back(text.substr(start, comma - start));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kFormat, "index line " + std::to_string(line_no) + ": " + what);
}

std::uint64_t parse_count(std::string_view field, std::size_t line_no) {
  auto value = parse_index(field);
  if (!value) malformed(line_no, "bad count '" + std::string(field) + "'");
  return static_cast<std::uint64_t>(*value);
}

struct HeaderReader {
  std::istream& in;
  std::size_t line_no = 0;

  IndexHeader read() {
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::kVersion, "empty index stream");
    ++line_no;
    auto magic = split_tabs(line);
    if (magic.size() != 2 || magic[0] != kMagic) {
      throw Error(ErrorCode::kVersion, "not a semsketch index");
    }
    IndexHeader header;
    auto version = parse_index(magic[1]);
    if (!version || *version != kIndexFormatVersion) {
      throw Error(ErrorCode::kVersion, "unsupported index format version '" +
                                           std::string(magic[1]) + "', expected " +
                                           std::to_string(kIndexFormatVersion));
    }
    header.format_version = static_cast<int>(*version);
    while (std::getline(in, line)) {
      ++line_no;
      if (line == kEndHeader) return header;
      auto kv = split_tabs(line);
      if (kv.size() != 2) malformed(line_no, "bad header row");
      if (kv[0] == "hierarchy_checksum") {
        header.hierarchy_checksum = std::string(kv[1]);
      } else if (kv[0] == "languages") {
        header.languages = split_commas(kv[1]);
      } else if (kv[0] == "record_count") {
        header.record_count = parse_count(kv[1], line_no);
      } else if (kv[0] == "provenance_cap") {
        header.provenance_cap = parse_count(kv[1], line_no);
      } else {
        malformed(line_no, "unknown header key '" + std::string(kv[0]) + "'");
      }
    }
    malformed(line_no, "truncated header");
  }
};

}  // namespace

FrequencyIndex::FrequencyIndex(std::size_t provenance_cap, std::string hierarchy_checksum)
    : provenance_cap_(provenance_cap), hierarchy_checksum_(std::move(hierarchy_checksum)) {}

void FrequencyIndex::accumulate(const LinkRecord& record) {
  FillerKey filler{record.filler_lemma, record.filler_semclass};
  auto& lang = languages_[record.core.language];
  auto& core = lang.cores[record.core];
  auto& role = core.roles[record.role];
  auto& cell = role.fillers[filler];
  ++cell.count;
  ++role.total;
  ++core.total;
  ++lang.filler_totals[filler];
  ++lang.total_links;
  ++total_links_;
  if (cell.examples.size() < provenance_cap_) {
    cell.examples.push_back({record.sent_id, record.core_token, record.filler_token});
  }
}

void FrequencyIndex::add_joint(const Lexeme& core_key, std::string_view role_name,
                               const FillerKey& filler, std::uint64_t count,
                               const std::vector<SentenceRef>& examples) {
  auto& lang = languages_[core_key.language];
  auto& core = lang.cores[core_key];
  auto role_it = core.roles.find(role_name);
  if (role_it == core.roles.end()) role_it = core.roles.emplace(std::string(role_name), RoleCell{}).first;
  auto& role = role_it->second;
  auto& cell = role.fillers[filler];
  cell.count += count;
  role.total += count;
  core.total += count;
  lang.filler_totals[filler] += count;
  lang.total_links += count;
  total_links_ += count;
  for (const auto& ref : examples) {
    if (cell.examples.size() >= provenance_cap_) break;
    cell.examples.push_back(ref);
  }
}

std::vector<std::string> FrequencyIndex::language_codes() const {
  std::vector<std::string> out;
  for (const auto& [code, table] : languages_) out.push_back(code);
  return out;
}

const CoreCell* FrequencyIndex::find_core(const Lexeme& core) const {
  auto lang = languages_.find(core.language);
  if (lang == languages_.end()) return nullptr;
  auto it = lang->second.cores.find(core);
  return it == lang->second.cores.end() ? nullptr : &it->second;
}

std::uint64_t FrequencyIndex::core_total(const Lexeme& core) const {
  const CoreCell* cell = find_core(core);
  return cell ? cell->total : 0;
}

std::uint64_t FrequencyIndex::role_total(const Lexeme& core, std::string_view role) const {
  const CoreCell* cell = find_core(core);
  if (!cell) return 0;
  auto it = cell->roles.find(role);
  return it == cell->roles.end() ? 0 : it->second.total;
}

std::uint64_t FrequencyIndex::joint(const Lexeme& core, std::string_view role,
                                    const FillerKey& filler) const {
  const CoreCell* cell = find_core(core);
  if (!cell) return 0;
  auto it = cell->roles.find(role);
  if (it == cell->roles.end()) return 0;
  auto f = it->second.fillers.find(filler);
  return f == it->second.fillers.end() ? 0 : f->second.count;
}

std::uint64_t FrequencyIndex::filler_total(std::string_view language,
                                           const FillerKey& filler) const {
  auto lang = languages_.find(std::string(language));
  if (lang == languages_.end()) return 0;
  auto it = lang->second.filler_totals.find(filler);
  return it == lang->second.filler_totals.end() ? 0 : it->second;
}

bool FrequencyIndex::same_counts(const FrequencyIndex& other) const {
  if (total_links_ != other.total_links_ || languages_.size() != other.languages_.size()) {
    return false;
  }
  for (auto a = languages_.begin(), b = other.languages_.begin(); a != languages_.end(); ++a, ++b) {
    if (a->first != b->first) return false;
    const auto& lhs = a->second;
    const auto& rhs = b->second;
    if (lhs.total_links != rhs.total_links || lhs.filler_totals != rhs.filler_totals ||
        lhs.cores.size() != rhs.cores.size()) {
      return false;
    }
    for (auto ca = lhs.cores.begin(), cb = rhs.cores.begin(); ca != lhs.cores.end(); ++ca, ++cb) {
      if (ca->first != cb->first || ca->second.total != cb->second.total ||
          ca->second.roles.size() != cb->second.roles.size()) {
        return false;
      }
      for (auto ra = ca->second.roles.begin(), rb = cb->second.roles.begin();
           ra != ca->second.roles.end(); ++ra, ++rb) {
        if (ra->first != rb->first || ra->second.total != rb->second.total ||
            ra->second.fillers.size() != rb->second.fillers.size()) {
          return false;
        }
        for (auto fa = ra->second.fillers.begin(), fb = rb->second.fillers.begin();
             fa != ra->second.fillers.end(); ++fa, ++fb) {
          if (fa->first != fb->first || fa->second.count != fb->second.count) return false;
        }
      }
    }
  }
  return true;
}

FrequencyIndex merge(const FrequencyIndex& a, const FrequencyIndex& b) {
  const auto& ca = a.hierarchy_checksum();
  const auto& cb = b.hierarchy_checksum();
  if (!ca.empty() && !cb.empty() && ca != cb) {
    throw Error(ErrorCode::kChecksum, "cannot merge indices built against different hierarchies");
  }
  FrequencyIndex out(a.provenance_cap(), ca.empty() ? cb : ca);
  for (const FrequencyIndex* side : {&a, &b}) {
    for (const auto& [code, table] : side->languages()) {
      for (const auto& [core, core_cell] : table.cores) {
        for (const auto& [role, role_cell] : core_cell.roles) {
          for (const auto& [filler, cell] : role_cell.fillers) {
            out.add_joint(core, role, filler, cell.count, cell.examples);
          }
        }
      }
    }
  }
  return out;
}

CorpusStats index_stats(const FrequencyIndex& index) {
  CorpusStats stats;
  for (const auto& [code, table] : index.languages()) {
    auto& lang = stats.languages[code];
    for (const auto& [core, cell] : table.cores) {
      lang.total_links += cell.total;
      ++lang.distinct_core_lexemes;
      ++lang.links_per_lexeme[cell.total];
    }
  }
  return stats;
}

std::vector<Lexeme> eligible_lexemes(const FrequencyIndex& index, std::uint64_t min_links) {
  std::vector<Lexeme> out;
  for (const auto& [code, table] : index.languages()) {
    for (const auto& [core, cell] : table.cores) {
      if (cell.total >= min_links) out.push_back(core);
    }
  }
  return out;  // map order is already (language, lemma, semclass)
}

void persist_index(std::ostream& out, const FrequencyIndex& index,
                   const SemanticHierarchy& hierarchy, const SentenceTable& sentences) {
  if (!hierarchy.empty() && !index.hierarchy_checksum().empty() &&
      hierarchy.checksum() != index.hierarchy_checksum()) {
    throw Error(ErrorCode::kChecksum, "hierarchy does not match the index checksum");
  }
  out << kMagic << '\t' << kIndexFormatVersion << '\n';
  out << "hierarchy_checksum\t" << index.hierarchy_checksum() << '\n';
  out << "languages\t" << join(index.language_codes(), ',') << '\n';
  out << "record_count\t" << index.total_links() << '\n';
  out << "provenance_cap\t" << index.provenance_cap() << '\n';
  out << kEndHeader << '\n';

  for (const auto& c : hierarchy.classes()) {
    out << "H\t" << c.name << '\t' << c.parent.value_or("") << '\n';
  }
  for (const auto& [id, entry] : sentences) {
    out << "S\t" << id << '\t' << entry.language << '\t' << entry.text << '\n';
  }
  for (const auto& [code, table] : index.languages()) {
    for (const auto& [core, core_cell] : table.cores) {
      for (const auto& [role, role_cell] : core_cell.roles) {
        for (const auto& [filler, cell] : role_cell.fillers) {
          out << "J\t" << code << '\t' << core.lemma << '\t' << core.semclass << '\t' << role
              << '\t' << filler.lemma << '\t' << filler.semclass << '\t' << cell.count << '\n';
          for (const auto& ref : cell.examples) {
            out << "P\t" << ref.sent_id << '\t' << ref.core_token << '\t' << ref.filler_token
                << '\n';
          }
        }
      }
    }
  }
}

IndexHeader read_index_header(std::istream& in) { return HeaderReader{in}.read(); }

IndexBundle load_index(std::istream& in, const std::optional<std::string>& expected_checksum) {
  HeaderReader reader{in};
  IndexHeader header = reader.read();
  if (expected_checksum && *expected_checksum != header.hierarchy_checksum) {
    throw Error(ErrorCode::kChecksum, "index was built against hierarchy " +
                                          header.hierarchy_checksum + ", expected " +
                                          *expected_checksum);
  }

  std::vector<SemanticClass> classes;
  SentenceTable sentences;
  FrequencyIndex index(header.provenance_cap, header.hierarchy_checksum);

  struct Pending {
    Lexeme core;
    std::string role;
    FillerKey filler;
    std::uint64_t count = 0;
    std::vector<SentenceRef> examples;
  };
  std::optional<Pending> pending;
  auto flush = [&] {
    if (pending) index.add_joint(pending->core, pending->role, pending->filler, pending->count,
                                 pending->examples);
    pending.reset();
  };

  std::string line;
  std::size_t line_no = reader.line_no;
  while (std::getline(in, line)) {
    ++line_no;
    auto f = split_tabs(line);
    if (f[0] == "J") {
      if (f.size() != 8) malformed(line_no, "joint row needs 8 columns");
      flush();
      Pending p;
      p.core.language = std::string(f[1]);
      p.core.lemma = std::string(f[2]);
      p.core.semclass = std::string(f[3]);
      p.role = std::string(f[4]);
      p.filler = FillerKey{std::string(f[5]), std::string(f[6])};
      p.count = parse_count(f[7], line_no);
      if (p.count == 0) malformed(line_no, "zero joint count");
      pending = std::move(p);
    } else if (f[0] == "P") {
      if (f.size() != 4 || !pending) malformed(line_no, "stray provenance row");
      if (pending->examples.size() >= header.provenance_cap) {
        malformed(line_no, "provenance exceeds cap");
      }
      auto core_token = parse_index(f[2]);
      auto filler_token = parse_index(f[3]);
      if (!core_token || !filler_token) malformed(line_no, "bad token index");
      pending->examples.push_back({std::string(f[1]), *core_token, *filler_token});
    } else if (f[0] == "H") {
      if (f.size() != 3) malformed(line_no, "hierarchy row needs 3 columns");
      SemanticClass c{std::string(f[1]), std::nullopt};
      if (!f[2].empty()) c.parent = std::string(f[2]);
      classes.push_back(std::move(c));
    } else if (f[0] == "S") {
      if (f.size() != 4) malformed(line_no, "sentence row needs 4 columns");
      SentenceEntry entry{std::string(f[1]), std::string(f[2]), std::string(f[3])};
      sentences.emplace(entry.sent_id, entry);
    } else {
      malformed(line_no, "unknown row tag");
    }
  }
  flush();

  if (index.total_links() != header.record_count) {
    throw Error(ErrorCode::kChecksum, "record count " + std::to_string(index.total_links()) +
                                          " does not match header " +
                                          std::to_string(header.record_count));
  }
  SemanticHierarchy hierarchy = SemanticHierarchy::from_classes(classes);
  if (!hierarchy.empty() && hierarchy.checksum() != header.hierarchy_checksum) {
    throw Error(ErrorCode::kChecksum, "embedded hierarchy does not match header checksum");
  }
  return IndexBundle{std::move(index), std::move(hierarchy), std::move(sentences)};
}

void save_index_file(const std::string& path, const FrequencyIndex& index,
                     const SemanticHierarchy& hierarchy, const SentenceTable& sentences) {
  std::ostringstream buffer;
  persist_index(buffer, index, hierarchy, sentences);
  write_file_atomic(path, buffer.str());
}

IndexBundle load_index_file(const std::string& path,
                            const std::optional<std::string>& expected_checksum) {
  auto in = open_input(path);
  return load_index(*in, expected_checksum);
}

SentenceTable referenced_sentences(const FrequencyIndex& index, const SentenceTable& table) {
  SentenceTable out;
  for (const auto& [code, lang] : index.languages()) {
    for (const auto& [core, core_cell] : lang.cores) {
      for (const auto& [role, role_cell] : core_cell.roles) {
        for (const auto& [filler, cell] : role_cell.fillers) {
          for (const auto& ref : cell.examples) {
            if (auto it = table.find(ref.sent_id); it != table.end()) out.insert(*it);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace semsketch
