#include "semsketch/serialize.hpp"

#include "semsketch/error.hpp"

namespace semsketch {

namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kFormat, std::string(what) + ": " + e.what());
  }
}

Json example_json(const Example& e) {
  Json j;
  j["sent_id"] = e.sent_id;
  j["text"] = e.text;
  j["core_token"] = e.core_token;
  j["filler_token"] = e.filler_token;
  return j;
}

Json filler_json(const FillerEntry& f) {
  Json j;
  j["lemma"] = f.lemma;
  j["semclass"] = f.semclass;
  j["count"] = f.count;
  j["score"] = f.score;
  j["flags"] = Json::array();
  if (f.suspicious) j["flags"].push_back("SUSPICIOUS");
  j["examples"] = Json::array();
  for (const auto& e : f.examples) j["examples"].push_back(example_json(e));
  return j;
}

Json slot_json(const Slot& s) {
  Json j;
  j["role"] = s.role;
  j["link_count"] = s.link_count;
  j["distinct_fillers"] = s.distinct_fillers;
  j["flags"] = Json::array();
  if (s.sparse) j["flags"].push_back("SPARSE");
  if (s.narrow) j["flags"].push_back("NARROW");
  j["fillers"] = Json::array();
  for (const auto& f : s.fillers) j["fillers"].push_back(filler_json(f));
  return j;
}

Side side_from(const std::string& name) {
  if (name == "left") return Side::kLeft;
  if (name == "right") return Side::kRight;
  throw Error(ErrorCode::kFormat, "bad side '" + name + "'");
}

Verdict verdict_from(const std::string& name) {
  if (name == "ROLE_GAP") return Verdict::kRoleGap;
  if (name == "FILLER_DIVERGENCE") return Verdict::kFillerDivergence;
  if (name == "NONE") return Verdict::kNone;
  throw Error(ErrorCode::kFormat, "bad verdict '" + name + "'");
}

}  // namespace

Json to_json(const Lexeme& lexeme) {
  Json j;
  j["lang"] = lexeme.language;
  j["lemma"] = lexeme.lemma;
  j["semclass"] = lexeme.semclass;
  return j;
}

Json to_json(const Config& c) {
  Json j;
  j["min_links"] = c.min_links;
  j["top_fillers"] = c.top_fillers;
  j["max_roles"] = c.max_roles ? Json(*c.max_roles) : Json(nullptr);
  j["measure"] = measure_name(c.measure);
  j["sparse_max_links"] = c.sparse_max_links;
  j["narrow_max_distinct"] = c.narrow_max_distinct;
  j["narrow_min_links"] = c.narrow_min_links;
  return j;
}

Json to_json(const Sketch& sketch) {
  Json j;
  j["lexeme"] = to_json(sketch.lexeme);
  j["total_links"] = sketch.total_links;
  j["config"] = to_json(sketch.config);
  j["slots"] = Json::array();
  for (const auto& slot : sketch.slots) j["slots"].push_back(slot_json(slot));
  return j;
}

Json to_json(const Diagnostics& diagnostics) {
  Json out = Json::array();
  for (const auto& d : diagnostics.slots) {
    Json j;
    j["role"] = d.role;
    j["flags"] = Json::array();
    for (auto flag : d.flags) j["flags"].push_back(slot_flag_name(flag));
    j["reasons"] = d.reasons;
    out.push_back(std::move(j));
  }
  return out;
}

Json to_json(const DiffReport& report) {
  Json j;
  j["role_gaps"] = Json::array();
  for (const auto& gap : report.role_gaps) {
    Json g;
    g["role"] = gap.role;
    g["side"] = side_name(gap.side);
    g["link_count"] = gap.link_count;
    j["role_gaps"].push_back(std::move(g));
  }
  j["shared_roles"] = Json::array();
  for (const auto& shared : report.shared_roles) {
    Json s;
    s["role"] = shared.role;
    s["class_overlap"] = shared.class_overlap;
    s["left_only_classes"] = shared.left_only_classes;
    s["right_only_classes"] = shared.right_only_classes;
    j["shared_roles"].push_back(std::move(s));
  }
  j["verdicts"] = Json::array();
  for (auto v : report.verdicts) j["verdicts"].push_back(verdict_name(v));
  return j;
}

Json to_json(const FieldReport& report) {
  Json j;
  j["semclass"] = report.semclass;
  j["role"] = report.role;
  j["languages"] = Json::array();
  for (const auto& lang : report.languages) {
    Json l;
    l["lang"] = lang.language;
    l["members"] = Json::array();
    for (const auto& m : lang.members) {
      Json member;
      member["lexeme"] = to_json(m.lexeme);
      member["link_count"] = m.link_count;
      member["distribution"] = Json::array();
      for (const auto& [cls, count] : m.distribution) {
        Json d;
        d["class"] = cls;
        d["count"] = count;
        member["distribution"].push_back(std::move(d));
      }
      l["members"].push_back(std::move(member));
    }
    j["languages"].push_back(std::move(l));
  }
  j["partition"] = Json::array();
  for (const auto& c : report.partition) {
    Json p;
    p["class"] = c.filler_class;
    p["coverage"] = Json::array();
    for (const auto& [code, lemmas] : c.lemmas) {
      Json cov;
      cov["lang"] = code;
      cov["lemmas"] = lemmas;
      p["coverage"].push_back(std::move(cov));
    }
    j["partition"].push_back(std::move(p));
  }
  return j;
}

Json pair_to_json(const Lexeme& left, const Lexeme& right, const std::string& semclass,
                  double affinity) {
  Json j;
  j["semclass"] = semclass;
  j["left"] = to_json(left);
  j["right"] = to_json(right);
  j["affinity"] = affinity;
  return j;
}

Lexeme lexeme_from_json(const Json& j) {
  return guarded("lexeme", [&] {
    Lexeme l;
    l.language = j.at("lang").get<std::string>();
    l.lemma = j.at("lemma").get<std::string>();
    l.semclass = j.at("semclass").get<std::string>();
    return l;
  });
}

Config config_from_json(const Json& j) {
  return guarded("config", [&] {
    Config c;
    c.min_links = j.at("min_links").get<std::uint64_t>();
    c.top_fillers = j.at("top_fillers").get<std::uint64_t>();
    if (!j.at("max_roles").is_null()) c.max_roles = j.at("max_roles").get<std::uint64_t>();
    auto measure = parse_measure(j.at("measure").get<std::string>());
    if (!measure) throw Error(ErrorCode::kFormat, "config: bad measure");
    c.measure = *measure;
    c.sparse_max_links = j.at("sparse_max_links").get<std::uint64_t>();
    c.narrow_max_distinct = j.at("narrow_max_distinct").get<std::uint64_t>();
    c.narrow_min_links = j.at("narrow_min_links").get<std::uint64_t>();
    return c;
  });
}

Sketch sketch_from_json(const Json& j) {
  return guarded("sketch", [&] {
    Sketch sketch;
    sketch.lexeme = lexeme_from_json(j.at("lexeme"));
    sketch.total_links = j.at("total_links").get<std::uint64_t>();
    sketch.config = config_from_json(j.at("config"));
    for (const auto& sj : j.at("slots")) {
      Slot slot;
      slot.role = sj.at("role").get<std::string>();
      slot.link_count = sj.at("link_count").get<std::uint64_t>();
      slot.distinct_fillers = sj.at("distinct_fillers").get<std::uint64_t>();
      for (const auto& flag : sj.at("flags")) {
        auto name = flag.get<std::string>();
        if (name == "SPARSE") {
          slot.sparse = true;
        } else if (name == "NARROW") {
          slot.narrow = true;
        } else {
          throw Error(ErrorCode::kFormat, "unknown slot flag '" + name + "'");
        }
      }
      for (const auto& fj : sj.at("fillers")) {
        FillerEntry f;
        f.lemma = fj.at("lemma").get<std::string>();
        f.semclass = fj.at("semclass").get<std::string>();
        f.count = fj.at("count").get<std::uint64_t>();
        f.score = fj.at("score").get<double>();
        for (const auto& flag : fj.at("flags")) {
          if (flag.get<std::string>() != "SUSPICIOUS") {
            throw Error(ErrorCode::kFormat, "unknown filler flag");
          }
          f.suspicious = true;
        }
        for (const auto& ej : fj.at("examples")) {
          f.examples.push_back({ej.at("sent_id").get<std::string>(),
                                ej.at("text").get<std::string>(),
                                ej.at("core_token").get<std::int64_t>(),
                                ej.at("filler_token").get<std::int64_t>()});
        }
        slot.fillers.push_back(std::move(f));
      }
      sketch.slots.push_back(std::move(slot));
    }
    return sketch;
  });
}

DiffReport diff_from_json(const Json& j) {
  return guarded("diff", [&] {
    DiffReport report;
    for (const auto& g : j.at("role_gaps")) {
      report.role_gaps.push_back({g.at("role").get<std::string>(),
                                  side_from(g.at("side").get<std::string>()),
                                  g.at("link_count").get<std::uint64_t>()});
    }
    for (const auto& s : j.at("shared_roles")) {
      report.shared_roles.push_back({s.at("role").get<std::string>(),
                                     s.at("class_overlap").get<double>(),
                                     s.at("left_only_classes").get<std::vector<std::string>>(),
                                     s.at("right_only_classes").get<std::vector<std::string>>()});
    }
    for (const auto& v : j.at("verdicts")) {
      report.verdicts.push_back(verdict_from(v.get<std::string>()));
    }
    return report;
  });
}

}  // namespace semsketch
