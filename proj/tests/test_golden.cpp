#include <gtest/gtest.h>

#include <set>

#include "enriques18/errors.hpp"
#include "enriques18/golden.hpp"
#include "test_support.hpp"

using namespace enriques18;

TEST(Golden, EmbeddedTables) {
  const GoldenTables t = load_golden();
  EXPECT_EQ(t.source, "embedded");
  EXPECT_EQ(t.names(3, Verdict::kRealized).size(), 40u);
  EXPECT_EQ(t.names(3, Verdict::kIndeterminate).size(), 8u);
  EXPECT_EQ(t.names(2, Verdict::kRealized).size(), 5u);
  EXPECT_EQ(t.names(4, Verdict::kRealized).size(), 3u);
  EXPECT_EQ(t.for_index(6).size(), 0u);
}

TEST(Golden, DirectoryMatchesEmbedded) {
  const GoldenTables disk = load_golden(support::source_golden_dir());
  const GoldenTables embedded = load_golden();
  for (int index : {2, 3, 4}) {
    for (Verdict v : {Verdict::kRealized, Verdict::kIndeterminate}) {
      EXPECT_EQ(disk.names(index, v), embedded.names(index, v));
    }
  }
  EXPECT_EQ(disk.entries.size(), embedded.entries.size());
}

TEST(Golden, EngineMatchesTables) {
  const GoldenTables t = load_golden();
  for (int index : {2, 3, 4}) {
    const GoldenDiff diff = verify_golden(classify(index), t);
    EXPECT_TRUE(diff.empty()) << index;
    EXPECT_TRUE(diff.lines().empty());
  }
}

TEST(Golden, TamperedTableGivesOneEntryDiff) {
  support::TempDir dir;
  support::write_golden(dir.path(), support::remove_d18);
  const GoldenDiff diff = verify_golden(classify(3), load_golden(dir.path()));
  EXPECT_EQ(diff.size(), 1u);
  EXPECT_EQ(diff.unexpected_realized, std::vector<std::string>{"D18"});
  ASSERT_EQ(diff.lines().size(), 1u);
  EXPECT_NE(diff.lines()[0].find("D18"), std::string::npos);
}

TEST(Golden, MissingAndMalformed) {
  support::TempDir dir;
  EXPECT_THROW(load_golden(dir.path()), GoldenFileMissing);
  support::write(dir.path() / "table1.json", "{ not json");
  support::write(dir.path() / "table2.json", "{}");
  EXPECT_THROW(load_golden(dir.path()), MalformedGolden);
  support::write_golden(dir.path(), [](nlohmann::json& t1) { t1["realized"][0]["name"] = "Q7"; });
  EXPECT_THROW(load_golden(dir.path()), MalformedGolden);
}

TEST(Golden, WitnessChains) {
  const auto checks = check_witness_chains(load_golden());
  std::set<std::string> corrected;
  std::size_t table1_realized = 0;
  for (const auto& c : checks) {
    EXPECT_TRUE(c.ok()) << c.entry << " component " << c.component << " " << c.detail;
    if (c.corrected) {
      corrected.insert(c.entry);
      EXPECT_FALSE(c.printed_valid) << c.entry;
      EXPECT_TRUE(c.corrected_valid) << c.entry;
    }
    if (c.entry.rfind("table2", 0) != 0) ++table1_realized;
  }
  EXPECT_EQ(corrected, (std::set<std::string>{"table2 (1) A1+A17", "table2 (3) A5+A13",
                                               "VI(5) D16+A2", "X(4) D6+A6+A6", "XI(10) D13+A2+A3",
                                               "XIII(6) D6+D10+A2"}));
  EXPECT_GT(table1_realized, 40u);
}

TEST(Golden, WitnessRowsAreEmbeddings) {
  EXPECT_EQ(check_witness_embeddings(load_golden()), std::vector<std::string>{});
}

TEST(Golden, MarksAgreeWithEngineLabelings) {
  EXPECT_EQ(check_golden_labelings(load_golden()), std::vector<std::string>{});
}

TEST(Golden, Labels) {
  const GoldenTables t = load_golden();
  std::set<std::string> labels;
  for (const auto& e : t.entries) labels.insert(e.label());
  EXPECT_TRUE(labels.count("II D18"));
  EXPECT_TRUE(labels.count("table2 (5) A9+A9"));
}
