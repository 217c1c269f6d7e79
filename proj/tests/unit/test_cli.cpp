#include <gtest/gtest.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "cli.hpp"
#include "semsketch/index.hpp"
#include "semsketch/io.hpp"
#include "semsketch/serialize.hpp"
#include "semsketch/store.hpp"
#include "support/fixtures.hpp"

using namespace semsketch;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("semsketch_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    testkit::FigureCorpus corpus;
    // Two link files so ingest merges shards.
    const auto& records = corpus.records();
    auto half = records.begin() + records.size() / 2;
    {
      std::ofstream a(path("a.slf"));
      write_links(a, std::vector<LinkRecord>(records.begin(), half));
      std::ofstream b(path("b.slf"));
      b << "# second half\n";
      write_links(b, std::vector<LinkRecord>(half, records.end()));
      b << "en\tbroken\tline\n";
      std::ofstream s(path("sentences.tsv"));
      write_sentence_table(s, corpus.sentences());
      std::ofstream h(path("hierarchy.tsv"));
      corpus.hierarchy().write_tsv(h);
    }
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args, std::string* out = nullptr) {
    ::testing::internal::CaptureStdout();
    int code = cli::run(args);
    std::string captured = ::testing::internal::GetCapturedStdout();
    if (out) *out = captured;
    return code;
  }

  void ingest_and_build() {
    ASSERT_EQ(run({"ingest", "--links", path("a.slf"), path("b.slf"), "--sentences",
                   path("sentences.tsv"), "--hierarchy", path("hierarchy.tsv"), "--out",
                   path("index")}),
              cli::kOk);
    ASSERT_EQ(run({"build", "--index", path("index"), "--min-links", "200", "--top", "8",
                   "--measure", "freq", "--lang", "en", "--out", path("en")}),
              cli::kOk);
    ASSERT_EQ(run({"build", "--index", path("index"), "--min-links", "2000", "--top", "8",
                   "--measure", "freq", "--lang", "ru", "--out", path("ru")}),
              cli::kOk);
    ASSERT_EQ(run({"pair", "--left", path("en"), "--right", path("ru"), "--out", path("both")}),
              cli::kOk);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, IngestReportsSummary) {
  std::string out;
  ASSERT_EQ(run({"ingest", "--links", path("a.slf"), path("b.slf"), "--hierarchy",
                 path("hierarchy.tsv"), "--out", path("index")},
                &out),
            cli::kOk);
  auto j = Json::parse(out);
  testkit::FigureCorpus corpus;
  EXPECT_EQ(j["records"], corpus.records().size());
  EXPECT_EQ(j["parse_errors"], 1);
  EXPECT_EQ(j["languages"], Json::array({"en", "ru"}));
  auto bundle = load_index_file(path("index"), corpus.hierarchy().checksum());
  EXPECT_TRUE(bundle.index.same_counts(corpus.index()));
}

TEST_F(CliTest, EndToEnd) {
  ingest_and_build();
  auto en_store = load_sketch_set(path("en"));
  EXPECT_EQ(en_store.languages(), std::vector<std::string>{"en"});
  auto both = load_sketch_set(path("both"));
  EXPECT_EQ(both.languages(), (std::vector<std::string>{"en", "ru"}));
  EXPECT_EQ(both.build_configs.at("ru").min_links, 2000u);
  testkit::FigureCorpus corpus;
  auto expected = testkit::figure_set(corpus);
  EXPECT_EQ(both.sketches.size(), expected.sketches.size());
  EXPECT_EQ(both.pairs, expected.pairs);
  for (const auto& [lexeme, sketch] : expected.sketches) {
    ASSERT_TRUE(both.find(lexeme)) << lexeme.label();
    EXPECT_EQ(*both.find(lexeme), *sketch) << lexeme.label();
  }

  std::string out;
  ASSERT_EQ(run({"diff", "--store", path("both"), "--left", "en:shake:TO_SHAKE", "--right",
                 "ru:трясти:TO_SHAKE"},
                &out),
            cli::kOk);
  auto diff = Json::parse(out);
  EXPECT_EQ(diff["diff"]["role_gaps"][0]["role"], "Locative_InitialPoint");
  EXPECT_EQ(diff["diff"]["role_gaps"][0]["side"], "left");

  ASSERT_EQ(run({"report", "--store", path("both"), "--class", "TO_POUR"}, &out), cli::kOk);
  auto report = Json::parse(out);
  EXPECT_EQ(report["semclass"], "TO_POUR");

  ASSERT_EQ(run({"stats", "--index", path("index")}, &out), cli::kOk);
  auto stats = Json::parse(out);
  EXPECT_EQ(stats["format_version"], 1);
  EXPECT_EQ(stats["record_count"], corpus.records().size());
  EXPECT_EQ(stats["hierarchy_checksum"], corpus.hierarchy().checksum());
}

TEST_F(CliTest, CuratedPairing) {
  ingest_and_build();
  {
    std::ofstream c(path("curated.tsv"));
    c << "# keep one\nen\tpour\tTO_POUR\tru\tлить\tTO_POUR\n";
  }
  ASSERT_EQ(run({"pair", "--left", path("en"), "--right", path("ru"), "--curated",
                 path("curated.tsv"), "--out", path("curated")}),
            cli::kOk);
  EXPECT_EQ(load_sketch_set(path("curated")).pairs.size(), 1u);
}

TEST_F(CliTest, ValidateExitCodes) {
  std::string out;
  EXPECT_EQ(run({"validate", "--links", path("a.slf"), "--hierarchy", path("hierarchy.tsv")}, &out),
            cli::kOk);
  {
    std::ofstream bad(path("bad.slf"));
    bad << "en\tfocus\tTO_FOCUS\tObject\teffort\tNO_SUCH\ts1\t1\t2\n";
  }
  EXPECT_EQ(run({"validate", "--links", path("bad.slf"), "--hierarchy", path("hierarchy.tsv")},
                &out),
            cli::kData);
  EXPECT_NE(out.find("UNKNOWN_CLASS"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}), cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}), cli::kUsage);
  EXPECT_EQ(run({"ingest", "--links", path("a.slf")}), cli::kUsage);
  EXPECT_EQ(run({"build", "--index", path("index"), "--measure", "pmi", "--out", path("x")}),
            cli::kUsage);
  EXPECT_EQ(run({"stats", "--index", path("missing")}), cli::kIo);
  EXPECT_EQ(run({"ingest", "--links", path("missing.slf"), "--hierarchy", path("hierarchy.tsv"),
                 "--out", path("index")}),
            cli::kIo);
  {
    std::ofstream junk(path("junk"));
    junk << "not an index\n";
  }
  EXPECT_EQ(run({"stats", "--index", path("junk")}), cli::kData);
  ingest_and_build();
  EXPECT_EQ(run({"diff", "--store", path("both"), "--left", "en:nosuch:X", "--right",
                 "ru:трясти:TO_SHAKE"}),
            cli::kData);
  EXPECT_EQ(run({"diff", "--store", path("both"), "--left", "bad-ref", "--right", "x"}),
            cli::kUsage);
  EXPECT_EQ(run({"serve", "--store", path("both"), "--bind", "nonsense"}), cli::kUsage);
}
