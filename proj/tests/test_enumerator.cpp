#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "enriques18/enumerator.hpp"
#include "enriques18/errors.hpp"
#include "oracles.hpp"

using namespace enriques18;

namespace {

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

std::set<std::string> oracle_types(int index) {
  std::set<std::string> out;
  for (const auto& m : oracle::ade_multisets(18)) {
    if (oracle::feasible(m, index)) out.insert(oracle::name(m));
  }
  return out;
}

// Expands one block-count tuple into named rank-18 configurations.
std::set<std::string> expand(int a, int b, int c, int d, int e) {
  // Block k: (letter, step, offset, minimum parameter): rank = step * x + offset.
  struct Block {
    char letter;
    int offset;
    int min;
  };
  std::vector<Block> blocks;
  for (int i = 0; i < a; ++i) blocks.push_back({'D', 1, 1});
  for (int i = 0; i < b; ++i) blocks.push_back({'D', 0, 2});
  for (int i = 0; i < c; ++i) blocks.push_back({'A', 0, 1});
  for (int i = 0; i < d; ++i) blocks.push_back({'A', -1, 1});
  for (int i = 0; i < e; ++i) blocks.push_back({'A', -2, 1});
  std::set<std::string> out;
  std::vector<oracle::Shape> current;
  auto rec = [&](auto&& self, std::size_t k, int left) -> void {
    if (k == blocks.size()) {
      if (left == 0) out.insert(oracle::name(current));
      return;
    }
    for (int x = blocks[k].min; 3 * x + blocks[k].offset <= left; ++x) {
      current.emplace_back(blocks[k].letter, 3 * x + blocks[k].offset);
      self(self, k + 1, left - (3 * x + blocks[k].offset));
      current.pop_back();
    }
  };
  rec(rec, 0, 18);
  return out;
}

int phi(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
  return count;
}

}  // namespace

TEST(Enumerator, IndexCandidates) {
  std::vector<int> expected;
  for (int i = 2; i <= 18; ++i) {
    if (phi(i) <= 3) expected.push_back(i);
  }
  EXPECT_EQ(index_candidates(), expected);
  EXPECT_EQ(index_candidates(), (std::vector<int>{2, 3, 4, 6}));
}

TEST(Enumerator, FamilySolutionsMatchOracle) {
  const auto solutions = enumerate_family_solutions();
  ASSERT_EQ(solutions.size(), 13u);
  std::set<std::tuple<int, int, int, int, int>> library;
  for (const auto& s : solutions) library.insert({s.a, s.b, s.c, s.d, s.e});
  const auto brute = oracle::family_tuples();
  const std::set<std::tuple<int, int, int, int, int>> expected(brute.begin(), brute.end());
  EXPECT_EQ(library, expected);
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    EXPECT_EQ(family_number(solutions[i].family), static_cast<int>(i) + 1);
  }
  EXPECT_EQ(family_number("XIV"), 0);
}

TEST(Enumerator, Index2) {
  EXPECT_EQ(as_set(enumerate_types(2).names()),
            (std::set<std::string>{"A1+A17", "A3+A15", "A5+A13", "A7+A11", "A9+A9"}));
}

TEST(Enumerator, Index3FamilyCounts) {
  const CandidateList list = enumerate_types(3);
  ASSERT_EQ(list.types.size(), 48u);
  std::map<std::string, int> per_family;
  for (const auto& t : list.types) per_family[*t.family]++;
  const std::vector<int> expected{1, 1, 3, 4, 2, 5, 3, 1, 2, 4, 10, 6, 6};
  for (const auto& s : enumerate_family_solutions()) {
    EXPECT_EQ(per_family[s.family], expected[static_cast<std::size_t>(family_number(s.family) - 1)])
        << s.family;
    std::set<std::string> names;
    for (const auto& t : list.types) {
      if (t.family == s.family) names.insert(t.configuration.name());
    }
    EXPECT_EQ(names, expand(s.a, s.b, s.c, s.d, s.e)) << s.family;
  }
}

TEST(Enumerator, Index4) {
  EXPECT_EQ(as_set(enumerate_types(4).names()),
            (std::set<std::string>{"A1+A17", "A5+A13", "A9+A9"}));
}

TEST(Enumerator, Index6IsEmptyWithTrace) {
  const CandidateList list = enumerate_types(6);
  EXPECT_TRUE(list.types.empty());
  ASSERT_TRUE(list.trace.has_value());
  EXPECT_TRUE(list.trace->impossible);
}

TEST(Enumerator, UnsupportedIndices) {
  EXPECT_THROW(enumerate_types(7), UnsupportedIndex);
  EXPECT_THROW(enumerate_types(5), UnsupportedIndex);
  EXPECT_THROW(enumerate_types(1), UnsupportedIndex);
}

TEST(Enumerator, OracleEquivalence) {
  for (int index : {2, 3, 4}) {
    EXPECT_EQ(as_set(enumerate_types(index).names()), oracle_types(index)) << "index " << index;
  }
}

TEST(Enumerator, ExclusionReasons) {
  const auto a3 = exclusion_reason(parse_configuration("A3+A15"), 4);
  ASSERT_TRUE(a3.has_value());
  EXPECT_EQ(a3->rule, "fixed-curve-budget");
  EXPECT_NE(a3->message.find("f-count minimum 5 exceeds N=4"), std::string::npos);
  const auto a7 = exclusion_reason(parse_configuration("A7+A11"), 4);
  ASSERT_TRUE(a7.has_value());
  EXPECT_NE(a7->message.find("f-count minimum 5 exceeds N=4"), std::string::npos);
  EXPECT_EQ(exclusion_reason(parse_configuration("A2+A16"), 2)->rule, "odd-rank");
  EXPECT_EQ(exclusion_reason(parse_configuration("D5+A13"), 3)->rule, "d-rank-mod-3");
  EXPECT_EQ(exclusion_reason(parse_configuration("A12+E6"), 3)->rule, "e-type");
  EXPECT_EQ(exclusion_reason(parse_configuration("A9+A8"), 3)->rule, "rank");
  EXPECT_EQ(exclusion_reason(parse_configuration("A9+A9"), 6)->rule, "index-6");
  EXPECT_EQ(exclusion_reason(parse_configuration("A9+A9"), 7)->rule, "index");
  for (int index : {2, 3, 4}) {
    for (const auto& t : enumerate_types(index).types) {
      EXPECT_FALSE(exclusion_reason(t.configuration, index).has_value()) << t.configuration.name();
    }
  }
}
