#include "semsketch/ingest.hpp"

#include "semsketch/text.hpp"

namespace semsketch {

namespace {

bool has_line_break(std::string_view field) {
  return field.find_first_of("\t\n\r") != std::string_view::npos;
}

ParseError format_error(std::size_t line_no, std::string message) {
  return ParseError{line_no, ErrorCode::kFormat, std::move(message)};
}

}  // namespace

ParseResult parse_link_line(std::string_view line, std::size_t line_no) {
  auto fields = split_tabs(line);
  if (fields.size() != kSlfColumns) {
    return format_error(line_no, "expected " + std::to_string(kSlfColumns) + " columns, got " +
                                     std::to_string(fields.size()));
  }
  auto core_token = parse_index(fields[7]);
  auto filler_token = parse_index(fields[8]);
  if (!core_token) return format_error(line_no, "bad core token index '" + std::string(fields[7]) + "'");
  if (!filler_token) {
    return format_error(line_no, "bad filler token index '" + std::string(fields[8]) + "'");
  }
  auto core_lemma = normalize_nfc(fields[1]);
  auto filler_lemma = normalize_nfc(fields[4]);
  if (!core_lemma || !filler_lemma) return format_error(line_no, "ill-formed UTF-8");

  LinkRecord record;
  record.core.language = std::string(fields[0]);
  record.core.lemma = std::move(*core_lemma);
  record.core.semclass = std::string(fields[2]);
  record.role = std::string(fields[3]);
  record.filler_lemma = std::move(*filler_lemma);
  record.filler_semclass = std::string(fields[5]);
  record.sent_id = std::string(fields[6]);
  record.core_token = *core_token;
  record.filler_token = *filler_token;
  return record;
}

std::optional<ParseResult> LinkReader::next() {
  while (std::getline(in_, buffer_)) {
    ++line_no_;
    if (!buffer_.empty() && buffer_.back() == '\r') buffer_.pop_back();
    if (buffer_.empty() || buffer_.front() == '#') continue;
    return parse_link_line(buffer_, line_no_);
  }
  return std::nullopt;
}

std::string serialize_link(const LinkRecord& r) {
  const std::string_view text_fields[] = {r.core.language, r.core.lemma, r.core.semclass,
                                          r.role, r.filler_lemma, r.filler_semclass,
                                          r.sent_id};
  std::string line;
  for (auto field : text_fields) {
    if (has_line_break(field)) {
      throw Error(ErrorCode::kFormat, "field contains a tab or line break");
    }
    line.append(field);
    line.push_back('\t');
  }
  if (r.core_token < 0 || r.filler_token < 0) {
    throw Error(ErrorCode::kFormat, "negative token index");
  }
  line += std::to_string(r.core_token);
  line.push_back('\t');
  line += std::to_string(r.filler_token);
  return line;
}

void write_links(std::ostream& out, std::span<const LinkRecord> records) {
  for (const auto& record : records) out << serialize_link(record) << '\n';
}

SentenceTableResult parse_sentence_table(std::istream& in) {
  SentenceTableResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 3) {
      result.errors.push_back(format_error(line_no, "expected 3 columns"));
      continue;
    }
    if (fields[0].empty() || fields[2].empty()) {
      result.errors.push_back(format_error(line_no, "empty sentence id or text"));
      continue;
    }
    auto text = normalize_nfc(fields[2]);
    if (!text) {
      result.errors.push_back(format_error(line_no, "ill-formed UTF-8"));
      continue;
    }
    SentenceEntry entry{std::string(fields[0]), std::string(fields[1]), std::move(*text)};
    auto id = entry.sent_id;
    if (!result.sentences.emplace(std::move(id), std::move(entry)).second) {
      result.errors.push_back(ParseError{line_no, ErrorCode::kDuplicateSentence,
                                         "duplicate sentence id '" + std::string(fields[0]) + "'"});
    }
  }
  return result;
}

void write_sentence_table(std::ostream& out, const SentenceTable& table) {
  for (const auto& [id, entry] : table) {
    if (has_line_break(id) || has_line_break(entry.language) || has_line_break(entry.text)) {
      throw Error(ErrorCode::kFormat, "sentence field contains a tab or line break");
    }
    out << id << '\t' << entry.language << '\t' << entry.text << '\n';
  }
}

CorpusStats CorpusStatsBuilder::finish() const {
  CorpusStats stats;
  stats.parse_errors = parse_errors_;
  for (const auto& [lexeme, links] : per_lexeme_) {
    auto& lang = stats.languages[lexeme.language];
    lang.total_links += links;
    ++lang.distinct_core_lexemes;
    ++lang.links_per_lexeme[links];
  }
  return stats;
}

CorpusStats corpus_stats(std::span<const LinkRecord> records) {
  CorpusStatsBuilder builder;
  for (const auto& record : records) builder.add(record);
  return builder.finish();
}

}  // namespace semsketch
