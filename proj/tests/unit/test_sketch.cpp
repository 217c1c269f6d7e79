#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "semsketch/error.hpp"
#include "semsketch/serialize.hpp"
#include "semsketch/sketch.hpp"
#include "support/corpus.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace semsketch;
using semsketch::testkit::en;
using semsketch::testkit::ru;

namespace {

const testkit::FigureCorpus& figures() {
  static const testkit::FigureCorpus corpus;
  return corpus;
}

const FrequencyIndex& figure_index() {
  static const FrequencyIndex index = figures().index();
  return index;
}

Config ru_config() {
  Config c;
  c.min_links = Config::kRussianMinLinks;
  return c;
}

Config open_config(Measure measure = Measure::kFrequency) {
  Config c;
  c.min_links = 0;
  c.measure = measure;
  return c;
}

FrequencyIndex accumulate_all(const std::vector<LinkRecord>& records) {
  FrequencyIndex index;
  for (const auto& r : records) index.accumulate(r);
  return index;
}

Slot slot_with(std::uint64_t links, std::uint64_t distinct) {
  Slot s;
  s.role = "R";
  s.link_count = links;
  s.distinct_fillers = distinct;
  return s;
}

}  // namespace

TEST(Score, LogDiceIdentity) {
  EXPECT_EQ(score_filler(10, 10, 10, Measure::kLogDice), 14.0);
}

TEST(Score, LogDiceHandArithmetic) {
  EXPECT_DOUBLE_EQ(score_filler(5, 10, 30, Measure::kLogDice), 12.0);
}

TEST(Score, Frequency) { EXPECT_EQ(score_filler(7, 100, 500, Measure::kFrequency), 7.0); }

TEST(Score, DomainErrors) {
  for (auto [j, r, f] : {std::tuple{0, 10, 10}, {11, 10, 20}, {11, 20, 10}}) {
    try {
      score_filler(j, r, f, Measure::kLogDice);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDomain);
    }
  }
}

TEST(Score, LogDiceNeverExceeds14) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 20000; ++i) {
    std::uint64_t j = 1 + rng() % 1000;
    std::uint64_t r = j + rng() % 5000;
    std::uint64_t f = j + rng() % 5000;
    EXPECT_LE(score_filler(j, r, f, Measure::kLogDice), 14.0);
  }
}

TEST(Build, IgratObjectHasFourFillersAndIsNarrow) {
  auto s = build_sketch(figure_index(), ru("играть", "TO_COMMIT"), ru_config());
  const Slot* object = s.find_slot("Object");
  ASSERT_NE(object, nullptr);
  EXPECT_EQ(object->fillers.size(), 4u);
  EXPECT_EQ(object->distinct_fillers, 4u);
  EXPECT_EQ(object->link_count, 120u);
  EXPECT_TRUE(object->narrow);
  EXPECT_FALSE(object->sparse);
  EXPECT_EQ(object->fillers[0].lemma, "роль");
  EXPECT_EQ(object->fillers[3].lemma, "свадьба");
}

TEST(Build, TopEightOfTwelve) {
  auto s = build_sketch(figure_index(), en("do", "TO_COMMIT"), Config{});
  const Slot* object = s.find_slot("Object");
  ASSERT_NE(object, nullptr);
  EXPECT_EQ(object->fillers.size(), 8u);
  EXPECT_EQ(object->distinct_fillers, 12u);
  auto full = build_full_sketch(figure_index(), en("do", "TO_COMMIT"), Config{});
  EXPECT_EQ(full.find_slot("Object")->fillers.size(), 12u);
  EXPECT_EQ(truncate_fillers(full, 8), s);
}

TEST(Build, SingleRoleGivesSingleSlot) {
  std::vector<LinkRecord> records;
  for (int i = 0; i < 5; ++i) {
    LinkRecord r;
    r.core = en("lone", "TO_FOCUS");
    r.role = "Object";
    r.filler_lemma = "x" + std::to_string(i % 2);
    r.filler_semclass = "IDEA";
    r.sent_id = "s";
    records.push_back(r);
  }
  auto s = build_sketch(accumulate_all(records), en("lone", "TO_FOCUS"), open_config());
  EXPECT_EQ(s.slots.size(), 1u);
  EXPECT_EQ(s.total_links, 5u);
}

TEST(Build, Errors) {
  EXPECT_THROW(build_sketch(figure_index(), en("nosuch", "TO_FOCUS"), Config{}), Error);
  try {
    Config strict;
    strict.min_links = 2001;
    build_sketch(figure_index(), ru("лить", "TO_POUR"), strict);
    FAIL();
  } catch (const BelowThresholdError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBelowThreshold);
    EXPECT_EQ(e.links(), 2000u);
  }
  Config zero;
  zero.top_fillers = 0;
  EXPECT_THROW(build_sketch(figure_index(), en("do", "TO_COMMIT"), zero), Error);
}

TEST(Build, SlotOrderAndMaxRoles) {
  auto s = build_sketch(figure_index(), en("focus", "TO_FOCUS"), Config{});
  std::vector<std::string> roles;
  for (const auto& slot : s.slots) roles.push_back(slot.role);
  EXPECT_EQ(roles, (std::vector<std::string>{"Object", "Agent", "Locative", "Time"}));
  Config c;
  c.max_roles = 2;
  EXPECT_EQ(build_sketch(figure_index(), en("focus", "TO_FOCUS"), c).slots.size(), 2u);
  // Time has 5 links: SPARSE under the default threshold of 10.
  EXPECT_TRUE(s.find_slot("Time")->sparse);
}

TEST(Properties, RankStabilityMatchesOracleSort) {
  auto records = testkit::generate_corpus(31);
  testkit::BruteTally tally(records);
  auto index = accumulate_all(records);
  for (const auto& lexeme : tally.lexemes()) {
    auto s = build_full_sketch(index, lexeme, open_config());
    EXPECT_EQ(s.slots.size(), tally.roles(lexeme).size());
    for (const auto& slot : s.slots) {
      auto expected = tally.frequency_ranking(lexeme, slot.role);
      ASSERT_EQ(slot.fillers.size(), expected.size());
      for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_EQ(slot.fillers[i].count, expected[i].count);
        EXPECT_EQ(slot.fillers[i].lemma, expected[i].lemma);
        EXPECT_EQ(slot.fillers[i].semclass, expected[i].semclass);
      }
    }
  }
}

TEST(Properties, MeasuresAgreeOnMembershipAtFullWidth) {
  auto records = testkit::generate_corpus(32);
  auto index = accumulate_all(records);
  for (const auto& lexeme : eligible_lexemes(index, 0)) {
    auto freq = build_full_sketch(index, lexeme, open_config(Measure::kFrequency));
    auto dice = build_full_sketch(index, lexeme, open_config(Measure::kLogDice));
    ASSERT_EQ(freq.slots.size(), dice.slots.size());
    for (std::size_t i = 0; i < freq.slots.size(); ++i) {
      std::set<std::pair<std::string, std::string>> a;
      std::set<std::pair<std::string, std::string>> b;
      for (const auto& f : freq.slots[i].fillers) a.insert({f.lemma, f.semclass});
      for (const auto& f : dice.slots[i].fillers) b.insert({f.lemma, f.semclass});
      EXPECT_EQ(a, b);
    }
  }
}

TEST(Properties, RerankMatchesDirectBuild) {
  auto records = testkit::generate_corpus(33, {.links = 2000});
  auto index = accumulate_all(records);
  for (const auto& lexeme : eligible_lexemes(index, 0)) {
    auto freq = build_full_sketch(index, lexeme, open_config(Measure::kFrequency));
    auto dice = build_full_sketch(index, lexeme, open_config(Measure::kLogDice));
    auto reranked = rerank(freq, Measure::kLogDice,
                           index.languages().at(lexeme.language).filler_totals);
    EXPECT_EQ(reranked, dice);
  }
}

TEST(Properties, OneMoreLinkNeverLowersRank) {
  auto records = testkit::generate_corpus(34, {.links = 1500});
  std::mt19937 rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& pick = records[rng() % records.size()];
    auto rank_of = [&](const FrequencyIndex& index) {
      auto s = build_full_sketch(index, pick.core, open_config());
      const auto& fillers = s.find_slot(pick.role)->fillers;
      for (std::size_t i = 0; i < fillers.size(); ++i) {
        if (fillers[i].lemma == pick.filler_lemma && fillers[i].semclass == pick.filler_semclass) {
          return i;
        }
      }
      return fillers.size();
    };
    auto before = rank_of(accumulate_all(records));
    auto grown = records;
    grown.push_back(pick);
    EXPECT_LE(rank_of(accumulate_all(grown)), before);
  }
}

TEST(Properties, SensesDoNotLeak) {
  auto records = testkit::generate_corpus(35);
  // Lexemes 0 and 1 share a lemma; find the two senses for English.
  Lexeme sense_a("en", testkit::core_lemma("en", 0), "EV_0");
  std::vector<LinkRecord> without_other;
  std::vector<LinkRecord> other_only;
  for (const auto& r : records) {
    bool same_lemma = r.core.language == "en" && r.core.lemma == sense_a.lemma;
    if (same_lemma && r.core.semclass != sense_a.semclass) {
      other_only.push_back(r);
    } else {
      without_other.push_back(r);
    }
  }
  ASSERT_FALSE(other_only.empty());
  // Filler totals are language-wide, so compare under FREQUENCY where only
  // the lexeme's own cells matter.
  auto with = build_full_sketch(accumulate_all(records), sense_a, open_config());
  auto without = build_full_sketch(accumulate_all(without_other), sense_a, open_config());
  EXPECT_EQ(with, without);
}

TEST(Diagnose, Flags) {
  Config c;
  Sketch s;
  s.slots = {slot_with(3, 2), slot_with(120, 4), slot_with(200, 40)};
  s.slots[1].role = "Object";
  s.slots[2].role = "Agent";
  auto d = diagnose(s, c);
  ASSERT_EQ(d.slots.size(), 3u);
  EXPECT_EQ(d.slots[0].flags, std::vector<SlotFlag>{SlotFlag::kSparse});
  EXPECT_EQ(d.slots[1].flags, std::vector<SlotFlag>{SlotFlag::kNarrow});
  EXPECT_TRUE(d.slots[2].flags.empty());
  EXPECT_EQ(d.slots[1].reasons.size(), 1u);
  EXPECT_NE(d.slots[1].reasons[0].find("narrow_max_distinct 4"), std::string::npos);
  // Defaults are the boundaries: 10 links is not sparse, 49 links cannot be narrow.
  Sketch edge;
  edge.slots = {slot_with(10, 1), slot_with(49, 1)};
  auto e = diagnose(edge, c);
  EXPECT_TRUE(e.slots[0].flags.empty());
  EXPECT_TRUE(e.slots[1].flags.empty());
}

TEST(Suspicious, ThrowPurposeGoalYards) {
  auto s = build_full_sketch(figure_index(), en("throw", "TO_THROW"), Config{});
  flag_suspicious_fillers(s, figures().hierarchy());
  const Slot* goal = s.find_slot("Purpose_Goal");
  ASSERT_NE(goal, nullptr);
  std::map<std::string, bool> flagged;
  for (const auto& f : goal->fillers) flagged[f.lemma] = f.suspicious;
  EXPECT_TRUE(flagged.at("yard"));
  EXPECT_FALSE(flagged.at("goal"));  // GOAL_SCORE descends from SCORE
  EXPECT_FALSE(flagged.at("pass"));  // same class as the top filler
  EXPECT_FALSE(flagged.at("touchdown"));
  EXPECT_FALSE(s.find_slot("Locative_Distance")->fillers[0].suspicious);
}

TEST(Suspicious, RuleCases) {
  auto h = testkit::figure_hierarchy();
  Sketch s;
  Slot slot = slot_with(10, 3);
  slot.fillers = {{"water", "LIQUID", 8, 8, {}, false},
                  {"wine", "LIQUID", 1, 1, {}, false},
                  {"sand", "FRIABLE", 1, 1, {}, false}};
  s.slots.push_back(slot);
  flag_suspicious_fillers(s, h);
  EXPECT_FALSE(s.slots[0].fillers[0].suspicious);
  EXPECT_FALSE(s.slots[0].fillers[1].suspicious);
  EXPECT_TRUE(s.slots[0].fillers[2].suspicious);
}

TEST(Attach, ResolvesAndDrops) {
  auto s = build_sketch(figure_index(), en("focus", "TO_FOCUS"), Config{});
  auto copy = s;
  EXPECT_EQ(attach_examples(copy, figures().sentences()), 0u);
  for (const auto& slot : copy.slots) {
    for (const auto& f : slot.fillers) {
      EXPECT_FALSE(f.examples.empty());
      for (const auto& e : f.examples) EXPECT_FALSE(e.text.empty());
    }
  }
  auto missing = figures().sentences();
  missing.erase(s.slots[0].fillers[0].examples[0].sent_id);
  EXPECT_EQ(attach_examples(s, missing), 1u);
  EXPECT_EQ(s.slots[0].fillers[0].examples.size(), copy.slots[0].fillers[0].examples.size() - 1);
}

TEST(Json, SketchKeyOrderAndRoundTrip) {
  auto s = build_sketch(figure_index(), en("throw", "TO_THROW"), Config{});
  flag_suspicious_fillers(s, figures().hierarchy());
  attach_examples(s, figures().sentences());
  auto j = to_json(s);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"lexeme", "total_links", "config", "slots"}));
  keys.clear();
  for (auto it = j["lexeme"].begin(); it != j["lexeme"].end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"lang", "lemma", "semclass"}));
  keys.clear();
  for (auto it = j["slots"][0].begin(); it != j["slots"][0].end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"role", "link_count", "distinct_fillers", "flags",
                                            "fillers"}));
  keys.clear();
  const auto& filler = j["slots"][0]["fillers"][0];
  for (auto it = filler.begin(); it != filler.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"lemma", "semclass", "count", "score", "flags",
                                            "examples"}));
  keys.clear();
  for (auto it = filler["examples"][0].begin(); it != filler["examples"][0].end(); ++it) {
    keys.push_back(it.key());
  }
  EXPECT_EQ(keys, (std::vector<std::string>{"sent_id", "text", "core_token", "filler_token"}));

  EXPECT_EQ(sketch_from_json(Json::parse(j.dump())), s);
  EXPECT_THROW(sketch_from_json(Json::parse("{\"lexeme\":1}")), Error);
}
