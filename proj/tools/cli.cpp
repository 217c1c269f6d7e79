#include "cli.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "semsketch/contrastive.hpp"
#include "semsketch/error.hpp"
#include "semsketch/index.hpp"
#include "semsketch/ingest.hpp"
#include "semsketch/io.hpp"
#include "semsketch/serialize.hpp"
#include "semsketch/service.hpp"
#include "semsketch/store.hpp"
#include "semsketch/text.hpp"

namespace semsketch::cli {

namespace {

std::shared_ptr<spdlog::logger> make_logger() {
  auto logger = spdlog::get("semsketch");
  if (!logger) logger = spdlog::stderr_color_mt("semsketch");
  logger->set_pattern("semsketch [%l] %v");
  const char* env = std::getenv("SEMSKETCH_LOG");
  std::string level = env ? env : "warn";
  if (level == "error") {
    logger->set_level(spdlog::level::err);
  } else if (level == "info") {
    logger->set_level(spdlog::level::info);
  } else if (level == "debug") {
    logger->set_level(spdlog::level::debug);
  } else {
    logger->set_level(spdlog::level::warn);
  }
  return logger;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kIo: return kIo;
    case ErrorCode::kUsage: return kUsage;
    default: return kData;
  }
}

struct Shard {
  FrequencyIndex index;
  std::uint64_t parse_errors = 0;
  std::uint64_t invalid = 0;
};

Shard ingest_file(const std::string& path, const SemanticHierarchy& hierarchy, std::size_t cap,
                  spdlog::logger& log) {
  Shard shard{FrequencyIndex(cap, hierarchy.checksum())};
  auto in = open_input(path);
  LinkReader reader(*in);
  while (auto result = reader.next()) {
    if (auto* error = std::get_if<ParseError>(&*result)) {
      ++shard.parse_errors;
      log.debug("{}:{}: {}", path, error->line, error->message);
      continue;
    }
    const auto& record = std::get<LinkRecord>(*result);
    auto validation = validate_link(record, hierarchy);
    if (!validation.ok()) {
      ++shard.invalid;
      log.debug("{}:{}: {} {}", path, reader.line_number(),
                violation_name(validation.violations.front().kind),
                validation.violations.front().field);
      continue;
    }
    shard.index.accumulate(record);
  }
  return shard;
}

int cmd_ingest(const std::vector<std::string>& links, const std::string& sentences_path,
               const std::string& hierarchy_path, const std::string& out, std::size_t cap,
               spdlog::logger& log) {
  auto hierarchy = SemanticHierarchy::load(hierarchy_path);

  // Files parse independently; merging in argument order keeps provenance
  // deterministic.
  std::vector<std::future<Shard>> pending;
  for (const auto& path : links) {
    pending.push_back(std::async(std::launch::async, ingest_file, path, std::cref(hierarchy), cap,
                                 std::ref(log)));
  }
  FrequencyIndex index(cap, hierarchy.checksum());
  std::uint64_t parse_errors = 0;
  std::uint64_t invalid = 0;
  for (auto& f : pending) {
    Shard shard = f.get();
    index = merge(index, shard.index);
    parse_errors += shard.parse_errors;
    invalid += shard.invalid;
  }

  SentenceTable sentences;
  if (!sentences_path.empty()) {
    auto in = open_input(sentences_path);
    auto parsed = parse_sentence_table(*in);
    for (const auto& e : parsed.errors) {
      log.warn("{}:{}: {} {}", sentences_path, e.line, error_name(e.code), e.message);
    }
    sentences = referenced_sentences(index, parsed.sentences);
  }
  save_index_file(out, index, hierarchy, sentences);

  if (parse_errors > 0) log.warn("{} malformed lines skipped", parse_errors);
  if (invalid > 0) log.warn("{} records failed validation and were skipped", invalid);
  log.info("indexed {} links into {}", index.total_links(), out);

  Json summary;
  summary["records"] = index.total_links();
  summary["parse_errors"] = parse_errors;
  summary["invalid_records"] = invalid;
  summary["languages"] = index.language_codes();
  std::cout << summary.dump(2) << "\n";
  return kOk;
}

int cmd_build(const std::string& index_path, const Config& config,
              const std::vector<std::string>& languages, const std::string& out,
              spdlog::logger& log) {
  config.validate();
  auto bundle = load_index_file(index_path);
  std::vector<Lexeme> lexemes;
  for (auto& lexeme : eligible_lexemes(bundle.index, config.min_links)) {
    if (languages.empty() ||
        std::find(languages.begin(), languages.end(), lexeme.language) != languages.end()) {
      lexemes.push_back(std::move(lexeme));
    }
  }

  // Sketch builds are pure over the shared index.
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::size_t chunk = (lexemes.size() + workers - 1) / std::max<std::size_t>(workers, 1);
  std::vector<std::future<std::pair<std::vector<Sketch>, std::size_t>>> jobs;
  for (std::size_t start = 0; start < lexemes.size(); start += chunk) {
    jobs.push_back(std::async(std::launch::async, [&, start] {
      std::vector<Sketch> built;
      std::size_t dropped = 0;
      for (std::size_t i = start; i < std::min(start + chunk, lexemes.size()); ++i) {
        Sketch sketch = build_full_sketch(bundle.index, lexemes[i], config);
        flag_suspicious_fillers(sketch, bundle.hierarchy);
        if (!bundle.sentences.empty()) dropped += attach_examples(sketch, bundle.sentences);
        built.push_back(std::move(sketch));
      }
      return std::make_pair(std::move(built), dropped);
    }));
  }

  SketchSetData data;
  data.hierarchy = bundle.hierarchy;
  data.hierarchy_checksum = bundle.index.hierarchy_checksum();
  std::size_t dropped = 0;
  for (auto& job : jobs) {
    auto [built, n] = job.get();
    dropped += n;
    for (auto& sketch : built) data.add(std::move(sketch));
  }
  for (const auto& code : bundle.index.language_codes()) {
    if (languages.empty() || std::find(languages.begin(), languages.end(), code) != languages.end()) {
      data.build_configs[code] = config;
    }
  }
  data.filler_totals = collect_filler_totals(bundle.index, data.sketches);
  for (const auto& code : bundle.index.language_codes()) {
    if (data.build_configs.contains(code)) data.filler_totals[code];
  }
  if (dropped > 0) log.warn("{} example references had no sentence text and were dropped", dropped);
  save_sketch_set(out, data);
  log.info("built {} sketches into {}", data.sketches.size(), out);
  std::cout << data.sketches.size() << " sketches\n";
  return kOk;
}

int cmd_pair(const std::string& left_path, const std::string& right_path,
             const std::string& curated_path, double threshold, const std::string& out,
             spdlog::logger& log) {
  auto left = load_sketch_set(left_path);
  auto right = load_sketch_set(right_path, left.hierarchy_checksum);

  SketchSetData merged = left;
  for (const auto& [lexeme, sketch] : right.sketches) merged.sketches.emplace(lexeme, sketch);
  for (const auto& [code, config] : right.build_configs) merged.build_configs.emplace(code, config);
  for (const auto& [code, totals] : right.filler_totals) merged.filler_totals.emplace(code, totals);
  if (merged.hierarchy.empty()) merged.hierarchy = right.hierarchy;

  SketchSet left_set;
  SketchSet right_set;
  for (const auto& [lexeme, sketch] : left.sketches) left_set.push_back(sketch);
  for (const auto& [lexeme, sketch] : right.sketches) right_set.push_back(sketch);
  auto pairs = pair_by_class(left_set, right_set);
  if (!curated_path.empty()) {
    auto in = open_input(curated_path);
    auto curated = parse_curated_pairs(*in);
    auto kept = filter_curated(pairs, curated);
    if (kept.size() < curated.size()) {
      log.warn("{} curated pairs have no matching sketches", curated.size() - kept.size());
    }
    pairs = std::move(kept);
  }
  merged.pairs.clear();
  for (const auto& pair : pairs) merged.pairs.push_back(make_pair_record(pair, threshold));
  save_sketch_set(out, merged);
  std::cout << merged.pairs.size() << " pairs\n";
  return kOk;
}

int cmd_diff(const std::string& store_path, const std::string& left_ref,
             const std::string& right_ref) {
  auto left = parse_lexeme_ref(left_ref);
  auto right = parse_lexeme_ref(right_ref);
  SketchService service(load_sketch_set(store_path));
  auto path = "/v1/pair/" + percent_encode(left.language) + "/" + percent_encode(left.lemma) +
              "/" + percent_encode(left.semclass) + "/" + percent_encode(right.language) + "/" +
              percent_encode(right.lemma) + "/" + percent_encode(right.semclass) + "/diff";
  auto response = service.get(path, {});
  if (response.status != 200) {
    std::cerr << response.body << "\n";
    return kData;
  }
  std::cout << Json::parse(response.body).dump(2) << "\n";
  return kOk;
}

int cmd_report(const std::string& store_path, const std::string& semclass,
               const std::string& role) {
  auto data = load_sketch_set(store_path);
  auto languages = data.languages();
  if (languages.size() < 2) {
    throw Error(ErrorCode::kEmptyClass, "store holds fewer than two languages");
  }
  auto report = field_structure_report(semclass, data.sketches_for(languages[0]),
                                       data.sketches_for(languages[1]), role);
  std::cout << to_json(report).dump(2) << "\n";
  return kOk;
}

int cmd_stats(const std::string& index_path) {
  IndexHeader header;
  {
    auto in = open_input(index_path);
    header = read_index_header(*in);
  }
  auto bundle = load_index_file(index_path);
  auto stats = index_stats(bundle.index);

  Json j;
  j["format_version"] = header.format_version;
  j["hierarchy_checksum"] = header.hierarchy_checksum;
  j["languages"] = header.languages;
  j["record_count"] = header.record_count;
  j["provenance_cap"] = header.provenance_cap;
  j["per_language"] = Json::object();
  for (const auto& [code, lang] : stats.languages) {
    Json l;
    l["total_links"] = lang.total_links;
    l["distinct_core_lexemes"] = lang.distinct_core_lexemes;
    l["links_per_lexeme"] = Json::array();
    for (const auto& [links, lexemes] : lang.links_per_lexeme) {
      l["links_per_lexeme"].push_back(Json::array({links, lexemes}));
    }
    j["per_language"][code] = std::move(l);
  }
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_validate(const std::string& links_path, const std::string& hierarchy_path) {
  auto hierarchy = SemanticHierarchy::load(hierarchy_path);
  auto in = open_input(links_path);
  LinkReader reader(*in);
  std::uint64_t records = 0;
  std::uint64_t problems = 0;
  while (auto result = reader.next()) {
    ++records;
    if (auto* error = std::get_if<ParseError>(&*result)) {
      ++problems;
      std::cout << "line " << error->line << ": " << error_name(error->code) << ": "
                << error->message << "\n";
      continue;
    }
    auto validation = validate_link(std::get<LinkRecord>(*result), hierarchy);
    for (const auto& v : validation.violations) {
      std::cout << "line " << reader.line_number() << ": " << violation_name(v.kind) << ": "
                << v.field << (v.detail.empty() ? "" : " " + v.detail) << "\n";
    }
    if (!validation.ok()) ++problems;
  }
  std::cout << records << " lines checked, " << problems << " with problems\n";
  return problems == 0 ? kOk : kData;
}

int cmd_serve(const std::string& store_path, const std::string& bind, spdlog::logger& log) {
  auto colon = bind.rfind(':');
  int port = -1;
  if (colon != std::string::npos) {
    try {
      port = std::stoi(bind.substr(colon + 1));
    } catch (const std::exception&) {
      port = -1;
    }
  }
  if (port < 0 || port > 65535) throw Error(ErrorCode::kUsage, "--bind must be HOST:PORT");
  SketchService service(load_sketch_set(store_path));
  SketchServer server(service);
  int bound = server.bind(bind.substr(0, colon), port);
  if (bound < 0) throw Error(ErrorCode::kIo, "cannot bind " + bind);
  log.info("serving {} on {}:{}", store_path, bind.substr(0, colon), bound);
  std::cout << "listening on " << bind.substr(0, colon) << ":" << bound << std::endl;
  server.run();
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  auto log = make_logger();

  CLI::App app{"semsketch: per-sense semantic sketches and bilingual sketch comparison"};
  app.require_subcommand(1);

  std::vector<std::string> links;
  std::string sentences, hierarchy, out, index_path, store, left, right, curated, semclass, bind;
  std::string role = "Object";
  std::string measure_text = "freq";
  std::size_t cap = FrequencyIndex::kDefaultProvenanceCap;
  double threshold = kDefaultDivergenceThreshold;
  std::vector<std::string> languages;
  Config config;
  std::uint64_t max_roles = 0;

  auto* ingest = app.add_subcommand("ingest", "Index SLF link files");
  ingest->add_option("--links", links, "SLF v1 link file(s), .gz allowed")->required();
  ingest->add_option("--sentences", sentences, "sentence table TSV");
  ingest->add_option("--hierarchy", hierarchy, "semantic class hierarchy TSV")->required();
  ingest->add_option("--out", out, "index file to write")->required();
  ingest->add_option("--provenance-cap", cap, "examples kept per (core, role, filler)");

  auto* build = app.add_subcommand("build", "Build sketches for every eligible lexeme");
  build->add_option("--index", index_path)->required();
  build->add_option("--min-links", config.min_links)->capture_default_str();
  build->add_option("--top", config.top_fillers)->capture_default_str();
  build->add_option("--measure", measure_text)->check(CLI::IsMember({"freq", "logdice"}))
      ->capture_default_str();
  build->add_option("--max-roles", max_roles, "0 means unlimited");
  build->add_option("--sparse-max-links", config.sparse_max_links)->capture_default_str();
  build->add_option("--narrow-max-distinct", config.narrow_max_distinct)->capture_default_str();
  build->add_option("--narrow-min-links", config.narrow_min_links)->capture_default_str();
  build->add_option("--lang", languages, "restrict to these languages");
  build->add_option("--out", out)->required();

  auto* pair = app.add_subcommand("pair", "Pair sketches across languages by semantic class");
  pair->add_option("--left", left)->required();
  pair->add_option("--right", right)->required();
  pair->add_option("--curated", curated, "TSV list of pairs to keep");
  pair->add_option("--threshold", threshold, "filler divergence threshold")->capture_default_str();
  pair->add_option("--out", out)->required();

  auto* diff_cmd = app.add_subcommand("diff", "Compare two sketches (lang:lemma:SEMCLASS)");
  diff_cmd->add_option("--store", store)->required();
  diff_cmd->add_option("--left", left)->required();
  diff_cmd->add_option("--right", right)->required();

  auto* report = app.add_subcommand("report", "Field structure report for a semantic class");
  report->add_option("--store", store)->required();
  report->add_option("--class", semclass)->required();
  report->add_option("--role", role)->capture_default_str();

  auto* stats = app.add_subcommand("stats", "Print index header and corpus statistics");
  stats->add_option("--index", index_path)->required();

  auto* validate = app.add_subcommand("validate", "Check an SLF file against a hierarchy");
  validate->add_option("--links", links)->required()->expected(1);
  validate->add_option("--hierarchy", hierarchy)->required();

  auto* serve_cmd = app.add_subcommand("serve", "Serve a store over the read-only /v1 API");
  serve_cmd->add_option("--store", store)->required();
  serve_cmd->add_option("--bind", bind)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*ingest) return cmd_ingest(links, sentences, hierarchy, out, cap, *log);
    if (*build) {
      config.measure = *parse_measure(measure_text);
      if (max_roles > 0) config.max_roles = max_roles;
      return cmd_build(index_path, config, languages, out, *log);
    }
    if (*pair) return cmd_pair(left, right, curated, threshold, out, *log);
    if (*diff_cmd) return cmd_diff(store, left, right);
    if (*report) return cmd_report(store, semclass, role);
    if (*stats) return cmd_stats(index_path);
    if (*validate) return cmd_validate(links.front(), hierarchy);
    if (*serve_cmd) return cmd_serve(store, bind, *log);
  } catch (const Error& e) {
    log->error("{}", e.what());
    return exit_code_for(e);
  } catch (const std::filesystem::filesystem_error& e) {
    log->error("{}", e.what());
    return kIo;
  }
  return kUsage;
}

}  // namespace semsketch::cli
