#pragma once

// Hand-built corpus reproducing the sketch figures and contrastive cases
// lexicographers cite: focus, do/делать, play/играть, pour/лить/сыпать,
// find/найти, shake/трясти, throw.

#include <string>
#include <vector>

#include "semsketch/hierarchy.hpp"
#include "semsketch/index.hpp"
#include "semsketch/ingest.hpp"
#include "semsketch/model.hpp"
#include "semsketch/sketch.hpp"
#include "semsketch/contrastive.hpp"
#include "semsketch/store.hpp"

namespace semsketch::testkit {

inline SemanticHierarchy figure_hierarchy() {
  std::vector<SemanticClass> classes{{"ROOT", std::nullopt}, {"SITUATION", "ROOT"},
                                     {"ENTITY", "ROOT"}};
  for (const char* c : {"TO_FOCUS", "TO_COMMIT", "TO_POUR", "TO_SEEK_FIND", "TO_SHAKE",
                        "TO_THROW"}) {
    classes.push_back({c, "SITUATION"});
  }
  for (const char* c : {"BEING", "SUBSTANCE", "PHYSICAL_OBJECT", "ABSTRACT", "ORGANIZATION"}) {
    classes.push_back({c, "ENTITY"});
  }
  classes.push_back({"PERSON", "BEING"});
  classes.push_back({"LIQUID", "SUBSTANCE"});
  classes.push_back({"FRIABLE", "SUBSTANCE"});
  for (const char* c : {"BODY_PART", "CONTAINER", "TEXTILE", "BALL", "DEVICE"}) {
    classes.push_back({c, "PHYSICAL_OBJECT"});
  }
  for (const char* c : {"ACTIVITY", "ATTENTION", "PROBLEM", "ROLE_PART", "JOKE", "SIGNIFICANCE",
                        "WEDDING", "STEP", "CHOICE", "OPERATION", "PICTURE", "WORK", "MISTAKE",
                        "IDEA", "TIME_PERIOD", "PLACE", "SCORE", "UNIT_OF_LENGTH",
                        "MODALITY_MARKER", "REASON", "METHOD", "SOLUTION", "AREA"}) {
    classes.push_back({c, "ABSTRACT"});
  }
  classes.push_back({"GOAL_SCORE", "SCORE"});
  return SemanticHierarchy::from_classes(classes);
}

class FigureCorpus {
 public:
  FigureCorpus() : hierarchy_(figure_hierarchy()) {
    focus();
    commit();
    pour();
    seek_find();
    shake();
    throw_();
  }

  const SemanticHierarchy& hierarchy() const { return hierarchy_; }
  const std::vector<LinkRecord>& records() const { return records_; }
  const SentenceTable& sentences() const { return sentences_; }

  FrequencyIndex index() const {
    FrequencyIndex index(FrequencyIndex::kDefaultProvenanceCap, hierarchy_.checksum());
    for (const auto& r : records_) index.accumulate(r);
    return index;
  }

 private:
  void add(const char* lang, const char* core, const char* core_class, const char* role,
           const char* filler, const char* filler_class, int n) {
    for (int i = 0; i < n; ++i) {
      LinkRecord r;
      r.core = Lexeme(lang, core, core_class);
      r.role = role;
      r.filler_lemma = filler;
      r.filler_semclass = filler_class;
      r.sent_id = std::string(lang) + "-" + std::to_string(records_.size());
      r.core_token = 1;
      r.filler_token = 3;
      sentences_[r.sent_id] = SentenceEntry{
          r.sent_id, lang, std::string("They ") + core + " the " + filler + " (" +
                               std::to_string(i) + ")."};
      records_.push_back(std::move(r));
    }
  }

  // 20-filler Object slot (paging), 290 links in total.
  void focus() {
    const char* objects[] = {"effort", "attention", "energy", "resource", "issue",
                             "problem", "mind", "eye", "camera", "light",
                             "study", "research", "discussion", "debate", "question",
                             "task", "work", "thought", "interest", "policy"};
    const char* classes[] = {"ACTIVITY", "ATTENTION", "IDEA", "PROBLEM"};
    for (int k = 0; k < 20; ++k) {
      add("en", "focus", "TO_FOCUS", "Object", objects[k], classes[k % 4], 20 - k);
    }
    add("en", "focus", "TO_FOCUS", "Agent", "person", "PERSON", 30);
    add("en", "focus", "TO_FOCUS", "Agent", "company", "ORGANIZATION", 12);
    add("en", "focus", "TO_FOCUS", "Agent", "team", "ORGANIZATION", 10);
    add("en", "focus", "TO_FOCUS", "Agent", "government", "ORGANIZATION", 8);
    add("en", "focus", "TO_FOCUS", "Locative", "area", "AREA", 15);
    add("en", "focus", "TO_FOCUS", "Time", "moment", "TIME_PERIOD", 5);
  }

  void commit() {
    // do: wide Object slot with 12 distinct fillers.
    add("en", "do", "TO_COMMIT", "Agent", "person", "PERSON", 60);
    add("en", "do", "TO_COMMIT", "Agent", "company", "ORGANIZATION", 10);
    add("en", "do", "TO_COMMIT", "Object", "step", "STEP", 20);
    add("en", "do", "TO_COMMIT", "Object", "choice", "CHOICE", 18);
    add("en", "do", "TO_COMMIT", "Object", "work", "WORK", 16);
    add("en", "do", "TO_COMMIT", "Object", "job", "WORK", 14);
    add("en", "do", "TO_COMMIT", "Object", "research", "ACTIVITY", 12);
    add("en", "do", "TO_COMMIT", "Object", "damage", "PROBLEM", 10);
    add("en", "do", "TO_COMMIT", "Object", "harm", "PROBLEM", 9);
    add("en", "do", "TO_COMMIT", "Object", "favor", "ACTIVITY", 8);
    add("en", "do", "TO_COMMIT", "Object", "business", "ACTIVITY", 7);
    add("en", "do", "TO_COMMIT", "Object", "exercise", "ACTIVITY", 6);
    add("en", "do", "TO_COMMIT", "Object", "homework", "WORK", 5);
    add("en", "do", "TO_COMMIT", "Object", "trick", "JOKE", 4);
    add("en", "do", "TO_COMMIT", "Object_Situation", "operation", "OPERATION", 20);
    add("en", "do", "TO_COMMIT", "Time", "day", "TIME_PERIOD", 12);
    add("en", "do", "TO_COMMIT", "Agent_Metaphoric", "system", "DEVICE", 5);
    add("en", "do", "TO_COMMIT", "Ch_Relation_Coincidence", "way", "METHOD", 6);

    add("ru", "делать", "TO_COMMIT", "Agent", "человек", "PERSON", 800);
    add("ru", "делать", "TO_COMMIT", "Agent", "компания", "ORGANIZATION", 50);
    add("ru", "делать", "TO_COMMIT", "Object", "шаг", "STEP", 200);
    add("ru", "делать", "TO_COMMIT", "Object", "выбор", "CHOICE", 180);
    add("ru", "делать", "TO_COMMIT", "Object", "работа", "WORK", 250);
    add("ru", "делать", "TO_COMMIT", "Object", "исследование", "ACTIVITY", 150);
    add("ru", "делать", "TO_COMMIT", "Object", "вред", "PROBLEM", 120);
    add("ru", "делать", "TO_COMMIT", "Object", "снимок", "PICTURE", 50);
    add("ru", "делать", "TO_COMMIT", "Object_Situation", "операция", "OPERATION", 100);
    add("ru", "делать", "TO_COMMIT", "Time", "день", "TIME_PERIOD", 80);
    add("ru", "делать", "TO_COMMIT", "Modality", "можно", "MODALITY_MARKER", 60);
    add("ru", "делать", "TO_COMMIT", "Locative", "дом", "PLACE", 70);

    add("en", "play", "TO_COMMIT", "Agent", "person", "PERSON", 80);
    add("en", "play", "TO_COMMIT", "Object_Situation", "role", "ROLE_PART", 50);
    add("en", "play", "TO_COMMIT", "Object_Situation", "trick", "JOKE", 25);
    add("en", "play", "TO_COMMIT", "Object_Situation", "joke", "JOKE", 20);
    add("en", "play", "TO_COMMIT", "Time", "year", "TIME_PERIOD", 10);
    add("en", "play", "TO_COMMIT", "Agent_Metaphoric", "factor", "IDEA", 8);
    add("en", "play", "TO_COMMIT", "Addition", "also", "MODALITY_MARKER", 5);
    add("en", "play", "TO_COMMIT", "Sphere", "politics", "AREA", 6);

    // играть: lexical-function Object slot with exactly four fillers.
    add("ru", "играть", "TO_COMMIT", "Agent", "человек", "PERSON", 300);
    add("ru", "играть", "TO_COMMIT", "Agent", "актёр", "PERSON", 100);
    add("ru", "играть", "TO_COMMIT", "Object", "роль", "ROLE_PART", 55);
    add("ru", "играть", "TO_COMMIT", "Object", "шутка", "JOKE", 30);
    add("ru", "играть", "TO_COMMIT", "Object", "значение", "SIGNIFICANCE", 20);
    add("ru", "играть", "TO_COMMIT", "Object", "свадьба", "WEDDING", 15);
    add("ru", "играть", "TO_COMMIT", "Object_Situation", "роль", "ROLE_PART", 800);
    add("ru", "играть", "TO_COMMIT", "Object_Situation", "значение", "SIGNIFICANCE", 400);
    add("ru", "играть", "TO_COMMIT", "Object_Situation", "шутка", "JOKE", 100);
    add("ru", "играть", "TO_COMMIT", "Time", "год", "TIME_PERIOD", 150);
    add("ru", "играть", "TO_COMMIT", "Agent_Metaphoric", "фактор", "IDEA", 80);
    add("ru", "играть", "TO_COMMIT", "Modality", "можно", "MODALITY_MARKER", 60);
    add("ru", "играть", "TO_COMMIT", "Locative", "театр", "PLACE", 50);
  }

  void pour() {
    add("en", "pour", "TO_POUR", "Agent", "person", "PERSON", 60);
    add("en", "pour", "TO_POUR", "Object", "water", "LIQUID", 40);
    add("en", "pour", "TO_POUR", "Object", "wine", "LIQUID", 30);
    add("en", "pour", "TO_POUR", "Object", "coffee", "LIQUID", 15);
    add("en", "pour", "TO_POUR", "Object", "sand", "FRIABLE", 35);
    add("en", "pour", "TO_POUR", "Object", "sugar", "FRIABLE", 30);
    add("en", "pour", "TO_POUR", "Locative_FinalPoint", "glass", "CONTAINER", 40);
    add("en", "pour", "TO_POUR", "Locative_FinalPoint", "bowl", "CONTAINER", 20);

    add("ru", "лить", "TO_POUR", "Agent", "человек", "PERSON", 600);
    add("ru", "лить", "TO_POUR", "Object", "вода", "LIQUID", 500);
    add("ru", "лить", "TO_POUR", "Object", "вино", "LIQUID", 300);
    add("ru", "лить", "TO_POUR", "Object", "кофе", "LIQUID", 200);
    add("ru", "лить", "TO_POUR", "Locative_FinalPoint", "стакан", "CONTAINER", 400);

    add("ru", "сыпать", "TO_POUR", "Agent", "человек", "PERSON", 500);
    add("ru", "сыпать", "TO_POUR", "Object", "песок", "FRIABLE", 400);
    add("ru", "сыпать", "TO_POUR", "Object", "сахар", "FRIABLE", 350);
    add("ru", "сыпать", "TO_POUR", "Object", "соль", "FRIABLE", 250);
    add("ru", "сыпать", "TO_POUR", "Locative_FinalPoint", "миска", "CONTAINER", 500);
  }

  // Five shared roles; the sixth is Metaphoric_Locative (en) vs Modality (ru).
  void seek_find() {
    add("en", "find", "TO_SEEK_FIND", "Agent", "person", "PERSON", 80);
    add("en", "find", "TO_SEEK_FIND", "Agent", "police", "ORGANIZATION", 20);
    add("en", "find", "TO_SEEK_FIND", "Object", "solution", "SOLUTION", 40);
    add("en", "find", "TO_SEEK_FIND", "Object", "way", "METHOD", 30);
    add("en", "find", "TO_SEEK_FIND", "Object", "key", "DEVICE", 20);
    add("en", "find", "TO_SEEK_FIND", "Locative", "house", "PLACE", 25);
    add("en", "find", "TO_SEEK_FIND", "Time", "day", "TIME_PERIOD", 15);
    add("en", "find", "TO_SEEK_FIND", "Purpose_Goal", "reason", "REASON", 12);
    add("en", "find", "TO_SEEK_FIND", "Metaphoric_Locative", "life", "AREA", 10);

    add("ru", "найти", "TO_SEEK_FIND", "Agent", "человек", "PERSON", 800);
    add("ru", "найти", "TO_SEEK_FIND", "Agent", "полиция", "ORGANIZATION", 200);
    add("ru", "найти", "TO_SEEK_FIND", "Object", "решение", "SOLUTION", 400);
    add("ru", "найти", "TO_SEEK_FIND", "Object", "способ", "METHOD", 300);
    add("ru", "найти", "TO_SEEK_FIND", "Object", "ключ", "DEVICE", 200);
    add("ru", "найти", "TO_SEEK_FIND", "Locative", "дом", "PLACE", 200);
    add("ru", "найти", "TO_SEEK_FIND", "Time", "день", "TIME_PERIOD", 150);
    add("ru", "найти", "TO_SEEK_FIND", "Purpose_Goal", "причина", "REASON", 100);
    add("ru", "найти", "TO_SEEK_FIND", "Modality", "можно", "MODALITY_MARKER", 80);
  }

  void shake() {
    add("en", "shake", "TO_SHAKE", "Agent", "person", "PERSON", 70);
    add("en", "shake", "TO_SHAKE", "Object", "head", "BODY_PART", 60);
    add("en", "shake", "TO_SHAKE", "Object", "hand", "BODY_PART", 50);
    add("en", "shake", "TO_SHAKE", "Object", "bottle", "CONTAINER", 20);
    add("en", "shake", "TO_SHAKE", "Locative_InitialPoint", "head", "BODY_PART", 15);
    add("en", "shake", "TO_SHAKE", "Locative_InitialPoint", "handkerchief", "TEXTILE", 10);

    add("ru", "трясти", "TO_SHAKE", "Agent", "человек", "PERSON", 900);
    add("ru", "трясти", "TO_SHAKE", "Object", "голова", "BODY_PART", 600);
    add("ru", "трясти", "TO_SHAKE", "Object", "рука", "BODY_PART", 400);
    add("ru", "трясти", "TO_SHAKE", "Object", "бутылка", "CONTAINER", 200);
  }

  // 'for 408 yards' lands in Purpose_Goal instead of Locative_Distance.
  void throw_() {
    add("en", "throw", "TO_THROW", "Agent", "quarterback", "PERSON", 100);
    add("en", "throw", "TO_THROW", "Agent", "player", "PERSON", 60);
    add("en", "throw", "TO_THROW", "Object", "ball", "BALL", 80);
    add("en", "throw", "TO_THROW", "Purpose_Goal", "touchdown", "SCORE", 12);
    add("en", "throw", "TO_THROW", "Purpose_Goal", "score", "SCORE", 6);
    add("en", "throw", "TO_THROW", "Purpose_Goal", "goal", "GOAL_SCORE", 1);
    add("en", "throw", "TO_THROW", "Purpose_Goal", "pass", "SCORE", 1);
    add("en", "throw", "TO_THROW", "Purpose_Goal", "yard", "UNIT_OF_LENGTH", 1);
    add("en", "throw", "TO_THROW", "Locative_Distance", "yard", "UNIT_OF_LENGTH", 8);
  }

  SemanticHierarchy hierarchy_;
  std::vector<LinkRecord> records_;
  SentenceTable sentences_;
};

// Full-width sketches for one language under its default threshold, with
// suspicious flags and examples attached.
inline SketchSet figure_sketches(const FigureCorpus& corpus, const FrequencyIndex& index,
                                 const std::string& language) {
  Config config;
  if (language == "ru") config.min_links = Config::kRussianMinLinks;
  SketchSet out;
  for (const auto& lexeme : eligible_lexemes(index, config.min_links)) {
    if (lexeme.language != language) continue;
    auto sketch = build_full_sketch(index, lexeme, config);
    flag_suspicious_fillers(sketch, corpus.hierarchy());
    attach_examples(sketch, corpus.sentences());
    out.push_back(std::make_shared<const Sketch>(std::move(sketch)));
  }
  return out;
}

inline SketchPtr find_sketch(const SketchSet& set, const Lexeme& lexeme) {
  for (const auto& s : set) {
    if (s->lexeme == lexeme) return s;
  }
  return nullptr;
}

// Both languages' sketches plus every class pair, ready to save or serve.
inline SketchSetData figure_set(const FigureCorpus& corpus) {
  auto index = corpus.index();
  SketchSetData data;
  data.hierarchy = corpus.hierarchy();
  data.hierarchy_checksum = corpus.hierarchy().checksum();
  auto english = figure_sketches(corpus, index, "en");
  auto russian = figure_sketches(corpus, index, "ru");
  data.build_configs["en"] = english.front()->config;
  data.build_configs["ru"] = russian.front()->config;
  for (const auto& s : english) data.sketches[s->lexeme] = s;
  for (const auto& s : russian) data.sketches[s->lexeme] = s;
  for (const auto& pair : pair_by_class(english, russian)) {
    data.pairs.push_back(make_pair_record(pair));
  }
  data.filler_totals = collect_filler_totals(index, data.sketches);
  return data;
}

inline Lexeme en(const char* lemma, const char* semclass) { return Lexeme("en", lemma, semclass); }
inline Lexeme ru(const char* lemma, const char* semclass) { return Lexeme("ru", lemma, semclass); }

}  // namespace semsketch::testkit
