#include "semsketch/service.hpp"

#include <algorithm>
#include <optional>
#include <vector>

#include "semsketch/error.hpp"
#include "semsketch/serialize.hpp"
#include "semsketch/text.hpp"

namespace semsketch {

namespace {

HttpResponse json_response(int status, const Json& body) { return {status, body.dump()}; }

HttpResponse error_response(int status, ErrorCode code, const std::string& message) {
  Json j;
  j["error"] = error_name(code);
  j["message"] = message;
  return json_response(status, j);
}

HttpResponse not_found(const std::string& message) {
  return error_response(404, ErrorCode::kNotFound, message);
}

struct UsageError {
  std::string message;
};

std::optional<std::string> param(const QueryParams& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

std::size_t count_param(const QueryParams& params, const std::string& key, std::size_t fallback) {
  auto value = param(params, key);
  if (!value) return fallback;
  auto parsed = parse_index(*value);
  if (!parsed) throw UsageError{"'" + key + "' must be a non-negative integer"};
  return static_cast<std::size_t>(*parsed);
}

std::optional<std::vector<std::string>> split_path(std::string_view raw) {
  std::vector<std::string> segments;
  std::size_t start = raw.starts_with('/') ? 1 : 0;
  while (start <= raw.size()) {
    auto slash = raw.find('/', start);
    auto piece = raw.substr(start, slash == std::string_view::npos ? raw.size() - start
                                                                   : slash - start);
    auto decoded = percent_decode(piece);
    if (!decoded) return std::nullopt;
    segments.push_back(std::move(*decoded));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  if (!segments.empty() && segments.back().empty()) segments.pop_back();
  return segments;
}

QueryParams parse_query(std::string_view query) {
  QueryParams params;
  std::size_t start = 0;
  while (start < query.size()) {
    auto amp = query.find('&', start);
    auto pair = query.substr(start, amp == std::string_view::npos ? query.npos : amp - start);
    auto eq = pair.find('=');
    std::string key(pair.substr(0, eq));
    std::string value(eq == std::string_view::npos ? "" : pair.substr(eq + 1));
    std::replace(key.begin(), key.end(), '+', ' ');
    std::replace(value.begin(), value.end(), '+', ' ');
    if (!key.empty()) {
      params.emplace(percent_decode(key).value_or(key), percent_decode(value).value_or(value));
    }
    if (amp == std::string_view::npos) break;
    start = amp + 1;
  }
  return params;
}

}  // namespace

SketchService::SketchService(SketchSetData data) : data_(std::move(data)) {
  Manifest m;
  m.hierarchy_checksum = data_.hierarchy_checksum;
  m.languages = data_.languages();
  for (const auto& code : m.languages) m.sketch_counts[code] = 0;
  for (const auto& [lexeme, sketch] : data_.sketches) ++m.sketch_counts[lexeme.language];
  m.build_configs = data_.build_configs;
  m.pair_count = data_.pairs.size();

  Json j;
  j["format_version"] = m.format_version;
  j["hierarchy_checksum"] = m.hierarchy_checksum;
  j["languages"] = m.languages;
  j["sketch_counts"] = Json::object();
  for (const auto& [code, n] : m.sketch_counts) j["sketch_counts"][code] = n;
  j["build_configs"] = Json::object();
  for (const auto& [code, c] : m.build_configs) j["build_configs"][code] = to_json(c);
  j["pair_count"] = m.pair_count;
  manifest_body_ = j.dump();
}

HttpResponse SketchService::get(std::string_view target) const {
  auto q = target.find('?');
  if (q == std::string_view::npos) return get(target, QueryParams{});
  return get(target.substr(0, q), parse_query(target.substr(q + 1)));
}

HttpResponse SketchService::get(std::string_view raw_path, const QueryParams& params) const {
  auto parsed = split_path(raw_path);
  if (!parsed) return error_response(400, ErrorCode::kUsage, "bad percent-encoding in path");
  const auto& seg = *parsed;
  if (seg.size() < 2 || seg[0] != "v1") return not_found("no such route");

  // Resolves the measure-adjusted full sketch for a lexeme.
  auto load_sketch = [&](const Lexeme& lexeme) -> std::optional<Sketch> {
    SketchPtr stored = data_.find(lexeme);
    if (!stored) return std::nullopt;
    auto measure_text = param(params, "measure");
    if (!measure_text) return *stored;
    auto measure = parse_measure(*measure_text);
    if (!measure) throw UsageError{"measure must be freq or logdice"};
    if (*measure == stored->config.measure) return *stored;
    auto totals = data_.filler_totals.find(lexeme.language);
    if (totals == data_.filler_totals.end()) {
      throw Error(ErrorCode::kNotFound, "no filler totals for language " + lexeme.language);
    }
    Sketch reranked = rerank(*stored, *measure, totals->second);
    flag_suspicious_fillers(reranked, data_.hierarchy);
    return reranked;
  };

  try {
    const std::string& head = seg[1];
    if (head == "manifest" && seg.size() == 2) return {200, manifest_body_};

    if (head == "languages" && seg.size() == 2) {
      Json j;
      j["languages"] = Json::array();
      for (const auto& code : data_.languages()) {
        Json l;
        l["lang"] = code;
        l["sketches"] = data_.sketches_for(code).size();
        j["languages"].push_back(std::move(l));
      }
      return json_response(200, j);
    }

    if (head == "lexemes" && seg.size() == 2) {
      auto lang = param(params, "lang");
      auto prefix = normalize_nfc(param(params, "prefix").value_or(""));
      if (!prefix) throw UsageError{"prefix is not UTF-8"};
      Json j;
      j["lexemes"] = Json::array();
      for (const auto& [lexeme, sketch] : data_.sketches) {
        if (lang && lexeme.language != *lang) continue;
        if (!lexeme.lemma.starts_with(*prefix)) continue;
        j["lexemes"].push_back(to_json(lexeme));
      }
      return json_response(200, j);
    }

    if (head == "sketch" && (seg.size() == 5 || seg.size() == 7)) {
      Lexeme lexeme;
      lexeme.language = seg[2];
      lexeme.lemma = normalize_nfc(seg[3]).value_or(seg[3]);
      lexeme.semclass = seg[4];
      auto sketch = load_sketch(lexeme);
      if (!sketch) return not_found("no sketch for " + format_lexeme_ref(lexeme));

      if (seg.size() == 5) {
        std::size_t top = count_param(params, "top", sketch->config.top_fillers);
        if (top == 0) throw UsageError{"top must be positive"};
        return json_response(200, to_json(truncate_fillers(std::move(*sketch), top)));
      }
      if (seg[5] != "slot") return not_found("no such route");
      const Slot* slot = sketch->find_slot(seg[6]);
      if (!slot) return not_found("no slot " + seg[6] + " in " + format_lexeme_ref(lexeme));
      std::size_t offset = count_param(params, "offset", 0);
      std::size_t limit = count_param(params, "limit", sketch->config.top_fillers);
      std::size_t begin = std::min(offset, slot->fillers.size());
      std::size_t end = begin + std::min(limit, slot->fillers.size() - begin);

      Json full_slot = to_json(*sketch)["slots"][static_cast<std::size_t>(slot - sketch->slots.data())];
      Json j;
      j["lexeme"] = to_json(lexeme);
      j["role"] = slot->role;
      j["link_count"] = slot->link_count;
      j["distinct_fillers"] = slot->distinct_fillers;
      j["flags"] = full_slot["flags"];
      j["offset"] = offset;
      j["limit"] = limit;
      j["total"] = slot->fillers.size();
      j["fillers"] = Json::array();
      for (std::size_t i = begin; i < end; ++i) j["fillers"].push_back(full_slot["fillers"][i]);
      return json_response(200, j);
    }

    if (head == "pairs" && seg.size() == 2) {
      auto semclass = param(params, "semclass");
      Json j;
      j["pairs"] = Json::array();
      for (const auto& p : data_.pairs) {
        if (semclass && p.semclass != *semclass) continue;
        j["pairs"].push_back(pair_to_json(p.left, p.right, p.semclass, p.affinity));
      }
      return json_response(200, j);
    }

    if (head == "pair" && seg.size() == 9 && seg[8] == "diff") {
      Lexeme left(seg[2], seg[3], seg[4]);
      Lexeme right(seg[5], seg[6], seg[7]);
      for (const auto& p : data_.pairs) {
        if (p.left == left && p.right == right) {
          Json j;
          j["pair"] = pair_to_json(p.left, p.right, p.semclass, p.affinity);
          j["diff"] = to_json(p.diff);
          return json_response(200, j);
        }
      }
      // Uncurated counterparts are still comparable when both sketches exist.
      SketchPtr ls = data_.find(left);
      SketchPtr rs = data_.find(right);
      if (!ls || !rs || left.semclass != right.semclass || left.language == right.language) {
        return not_found("no pair " + format_lexeme_ref(left) + " / " + format_lexeme_ref(right));
      }
      Json j;
      j["pair"] = pair_to_json(left, right, left.semclass, affinity(*ls, *rs));
      j["diff"] = to_json(diff(*ls, *rs));
      return json_response(200, j);
    }

    if (head == "classes" && seg.size() == 4 && seg[3] == "report") {
      auto languages = data_.languages();
      auto left = param(params, "left");
      auto right = param(params, "right");
      if (!left && !languages.empty()) left = languages.front();
      if (!right) {
        for (const auto& code : languages) {
          if (code != left) {
            right = code;
            break;
          }
        }
      }
      if (!left || !right) {
        return error_response(404, ErrorCode::kEmptyClass, "store holds fewer than two languages");
      }
      auto report = field_structure_report(seg[2], data_.sketches_for(*left),
                                           data_.sketches_for(*right),
                                           param(params, "role").value_or("Object"));
      return json_response(200, to_json(report));
    }
  } catch (const UsageError& e) {
    return error_response(400, ErrorCode::kUsage, e.message);
  } catch (const Error& e) {
    int status = (e.code() == ErrorCode::kNotFound || e.code() == ErrorCode::kEmptyClass) ? 404
                 : (e.code() == ErrorCode::kFormat || e.code() == ErrorCode::kUsage)     ? 400
                                                                                          : 500;
    return error_response(status, e.code(), e.what());
  }
  return not_found("no such route");
}

}  // namespace semsketch
