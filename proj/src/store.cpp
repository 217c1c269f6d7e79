#include "semsketch/store.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "semsketch/error.hpp"
#include "semsketch/io.hpp"
#include "semsketch/serialize.hpp"
#include "semsketch/text.hpp"

namespace fs = std::filesystem;

namespace semsketch {

namespace {

constexpr const char* kManifest = "manifest.json";
constexpr const char* kHierarchy = "hierarchy.tsv";
constexpr const char* kPairs = "pairs.json";
constexpr const char* kSketchDir = "sketches";
constexpr const char* kFillerDir = "fillers";

// Relative path -> file bytes, ordered, so the digest is deterministic.
using FileMap = std::map<std::string, std::string>;

std::string digest(const FileMap& files) {
  Fnv1a hash;
  for (const auto& [path, content] : files) {
    hash.update(path);
    hash.update(std::string_view("\0", 1));
    hash.update(content);
    hash.update(std::string_view("\0", 1));
  }
  return hash.hex();
}

std::string pairs_file(const std::vector<PairRecord>& pairs) {
  Json j;
  j["pairs"] = Json::array();
  for (const auto& p : pairs) {
    Json entry;
    entry["pair"] = pair_to_json(p.left, p.right, p.semclass, p.affinity);
    entry["diff"] = to_json(p.diff);
    j["pairs"].push_back(std::move(entry));
  }
  return j.dump() + "\n";
}

std::vector<PairRecord> parse_pairs_file(const std::string& content) {
  std::vector<PairRecord> out;
  try {
    auto j = Json::parse(content);
    for (const auto& entry : j.at("pairs")) {
      const auto& pj = entry.at("pair");
      out.push_back({lexeme_from_json(pj.at("left")), lexeme_from_json(pj.at("right")),
                     pj.at("semclass").get<std::string>(), pj.at("affinity").get<double>(),
                     diff_from_json(entry.at("diff"))});
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kChecksum, std::string("pairs.json is corrupt: ") + e.what());
  }
  return out;
}

std::string fillers_file(const std::map<FillerKey, std::uint64_t>& totals) {
  std::string out;
  for (const auto& [key, count] : totals) {
    out += key.lemma + "\t" + key.semclass + "\t" + std::to_string(count) + "\n";
  }
  return out;
}

std::map<FillerKey, std::uint64_t> parse_fillers_file(const std::string& content) {
  std::map<FillerKey, std::uint64_t> out;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    auto f = split_tabs(line);
    auto count = f.size() == 3 ? parse_index(f[2]) : std::nullopt;
    if (!count) throw Error(ErrorCode::kChecksum, "filler totals file is corrupt");
    out[FillerKey{std::string(f[0]), std::string(f[1])}] = static_cast<std::uint64_t>(*count);
  }
  return out;
}

Json manifest_json(const Manifest& m) {
  Json j;
  j["format_version"] = m.format_version;
  j["hierarchy_checksum"] = m.hierarchy_checksum;
  j["languages"] = m.languages;
  j["sketch_counts"] = Json::object();
  for (const auto& [code, n] : m.sketch_counts) j["sketch_counts"][code] = n;
  j["build_configs"] = Json::object();
  for (const auto& [code, c] : m.build_configs) j["build_configs"][code] = to_json(c);
  j["pair_count"] = m.pair_count;
  j["content_digest"] = m.content_digest;
  return j;
}

Manifest parse_manifest(const std::string& content) {
  Json j;
  try {
    j = Json::parse(content);
  } catch (const Json::exception&) {
    throw Error(ErrorCode::kVersion, "manifest is not valid JSON");
  }
  if (!j.is_object() || !j.contains("format_version") ||
      !j["format_version"].is_number_integer()) {
    throw Error(ErrorCode::kVersion, "manifest has no format_version");
  }
  Manifest m;
  m.format_version = j["format_version"].get<int>();
  if (m.format_version != kStoreFormatVersion) {
    throw Error(ErrorCode::kVersion, "store format version " + std::to_string(m.format_version) +
                                         ", expected " + std::to_string(kStoreFormatVersion));
  }
  try {
    m.hierarchy_checksum = j.at("hierarchy_checksum").get<std::string>();
    m.languages = j.at("languages").get<std::vector<std::string>>();
    for (const auto& [code, n] : j.at("sketch_counts").items()) {
      m.sketch_counts[code] = n.get<std::uint64_t>();
    }
    for (const auto& [code, c] : j.at("build_configs").items()) {
      m.build_configs[code] = config_from_json(c);
    }
    m.pair_count = j.at("pair_count").get<std::uint64_t>();
    m.content_digest = j.at("content_digest").get<std::string>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kChecksum, std::string("manifest is corrupt: ") + e.what());
  } catch (const Error& e) {
    throw Error(ErrorCode::kChecksum, std::string("manifest is corrupt: ") + e.what());
  }
  return m;
}

FileMap render(const SketchSetData& data) {
  FileMap files;
  if (!data.hierarchy.empty()) {
    std::ostringstream h;
    data.hierarchy.write_tsv(h);
    files[kHierarchy] = h.str();
  }
  for (const auto& [lexeme, sketch] : data.sketches) {
    files[sketch_path(lexeme).generic_string()] = to_json(*sketch).dump() + "\n";
  }
  for (const auto& [code, totals] : data.filler_totals) {
    files[(fs::path(kFillerDir) / (percent_encode(code) + ".tsv")).generic_string()] =
        fillers_file(totals);
  }
  files[kPairs] = pairs_file(data.pairs);
  return files;
}

std::string read_or_io(const fs::path& path) {
  try {
    return read_file(path);
  } catch (const Error&) {
    throw Error(ErrorCode::kIo, "cannot read " + path.string());
  }
}

}  // namespace

PairRecord make_pair_record(const SketchPair& pair, double divergence_threshold) {
  return {pair.left->lexeme, pair.right->lexeme, pair.semclass, pair.affinity,
          diff(pair, divergence_threshold)};
}

SketchPtr SketchSetData::find(const Lexeme& lexeme) const {
  auto it = sketches.find(lexeme);
  return it == sketches.end() ? nullptr : it->second;
}

SketchSet SketchSetData::sketches_for(const std::string& language) const {
  SketchSet out;
  for (const auto& [lexeme, sketch] : sketches) {
    if (lexeme.language == language) out.push_back(sketch);
  }
  return out;
}

std::vector<std::string> SketchSetData::languages() const {
  std::set<std::string> codes;
  for (const auto& [lexeme, sketch] : sketches) codes.insert(lexeme.language);
  for (const auto& [code, totals] : filler_totals) codes.insert(code);
  for (const auto& [code, config] : build_configs) codes.insert(code);
  return {codes.begin(), codes.end()};
}

fs::path sketch_path(const Lexeme& lexeme) {
  return fs::path(kSketchDir) / percent_encode(lexeme.language) /
         (percent_encode(lexeme.lemma) + "@" + percent_encode(lexeme.semclass) + ".json");
}

void save_sketch_set(const fs::path& root, const SketchSetData& data) {
  if (!data.hierarchy.empty() && data.hierarchy.checksum() != data.hierarchy_checksum) {
    throw Error(ErrorCode::kChecksum, "hierarchy does not match the set's checksum");
  }
  FileMap files = render(data);

  Manifest manifest;
  manifest.hierarchy_checksum = data.hierarchy_checksum;
  manifest.languages = data.languages();
  for (const auto& code : manifest.languages) manifest.sketch_counts[code] = 0;
  for (const auto& [lexeme, sketch] : data.sketches) ++manifest.sketch_counts[lexeme.language];
  manifest.build_configs = data.build_configs;
  manifest.pair_count = data.pairs.size();
  manifest.content_digest = digest(files);

  std::error_code ec;
  fs::create_directories(root, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + root.string() + ": " + ec.message());
  // Invalidate any previous manifest first so an interrupted save never
  // looks loadable.
  fs::remove(root / kManifest, ec);
  for (const char* stale : {kSketchDir, kFillerDir, kHierarchy, kPairs}) {
    fs::remove_all(root / stale, ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot clear " + (root / stale).string());
  }
  for (const auto& [relative, content] : files) {
    fs::path target = root / relative;
    fs::create_directories(target.parent_path(), ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot create " + target.parent_path().string());
    write_file_atomic(target, content);
  }
  write_file_atomic(root / kManifest, manifest_json(manifest).dump(2) + "\n");
}

Manifest read_manifest(const fs::path& root) {
  return parse_manifest(read_or_io(root / kManifest));
}

SketchSetData load_sketch_set(const fs::path& root,
                              const std::optional<std::string>& expected_checksum) {
  Manifest manifest = read_manifest(root);
  if (expected_checksum && *expected_checksum != manifest.hierarchy_checksum) {
    throw Error(ErrorCode::kChecksum, "store hierarchy checksum " + manifest.hierarchy_checksum +
                                          " differs from expected " + *expected_checksum);
  }

  FileMap files;
  std::error_code ec;
  if (fs::exists(root / kHierarchy)) files[kHierarchy] = read_or_io(root / kHierarchy);
  files[kPairs] = read_or_io(root / kPairs);
  for (const char* dir : {kSketchDir, kFillerDir}) {
    if (!fs::exists(root / dir)) continue;
    for (auto it = fs::recursive_directory_iterator(root / dir, ec);
         !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
      if (!it->is_regular_file()) continue;
      files[fs::relative(it->path(), root).generic_string()] = read_or_io(it->path());
    }
    if (ec) throw Error(ErrorCode::kIo, "cannot list " + (root / dir).string());
  }
  if (digest(files) != manifest.content_digest) {
    throw Error(ErrorCode::kChecksum, "store content does not match manifest digest");
  }

  SketchSetData data;
  data.hierarchy_checksum = manifest.hierarchy_checksum;
  data.build_configs = manifest.build_configs;
  std::map<std::string, std::uint64_t> counts;
  for (const auto& [relative, content] : files) {
    if (relative == kHierarchy) {
      std::istringstream in(content);
      data.hierarchy = SemanticHierarchy::parse_tsv(in);
      if (data.hierarchy.checksum() != manifest.hierarchy_checksum) {
        throw Error(ErrorCode::kChecksum, "hierarchy.tsv does not match manifest checksum");
      }
    } else if (relative == kPairs) {
      data.pairs = parse_pairs_file(content);
    } else if (relative.starts_with(std::string(kFillerDir) + "/")) {
      auto stem = fs::path(relative).stem().string();
      auto code = percent_decode(stem);
      if (!code) throw Error(ErrorCode::kChecksum, "bad filler file name " + relative);
      data.filler_totals[*code] = parse_fillers_file(content);
    } else {
      Sketch sketch;
      try {
        sketch = sketch_from_json(Json::parse(content));
      } catch (const Json::exception& e) {
        throw Error(ErrorCode::kChecksum, relative + " is corrupt: " + e.what());
      }
      if (sketch_path(sketch.lexeme).generic_string() != relative) {
        throw Error(ErrorCode::kChecksum, relative + " holds a different lexeme");
      }
      ++counts[sketch.lexeme.language];
      data.add(std::move(sketch));
    }
  }
  for (const auto& [code, n] : manifest.sketch_counts) {
    auto it = counts.find(code);
    if ((it == counts.end() ? 0 : it->second) != n) {
      throw Error(ErrorCode::kChecksum, "sketch count for '" + code + "' differs from manifest");
    }
  }
  for (const auto& [code, n] : counts) {
    if (!manifest.sketch_counts.contains(code)) {
      throw Error(ErrorCode::kChecksum, "sketches for unlisted language '" + code + "'");
    }
  }
  if (data.pairs.size() != manifest.pair_count) {
    throw Error(ErrorCode::kChecksum, "pair count differs from manifest");
  }
  return data;
}

std::map<std::string, std::map<FillerKey, std::uint64_t>> collect_filler_totals(
    const FrequencyIndex& index, const std::map<Lexeme, SketchPtr>& sketches) {
  std::map<std::string, std::map<FillerKey, std::uint64_t>> out;
  for (const auto& [lexeme, sketch] : sketches) {
    auto& totals = out[lexeme.language];
    for (const auto& slot : sketch->slots) {
      for (const auto& filler : slot.fillers) {
        FillerKey key{filler.lemma, filler.semclass};
        totals[key] = index.filler_total(lexeme.language, key);
      }
    }
  }
  return out;
}

}  // namespace semsketch
