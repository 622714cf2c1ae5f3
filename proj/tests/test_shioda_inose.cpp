#include <gtest/gtest.h>

#include <map>

#include "enriques18/errors.hpp"
#include "enriques18/lefschetz.hpp"
#include "enriques18/shioda_inose.hpp"

using namespace enriques18;

namespace {

// Degrees counted from the edge list alone.
std::map<std::string, int> degrees(const CurveGraph& g) {
  std::map<std::string, int> out;
  for (const auto& n : g.curves()) out[n] = 0;
  for (const auto& [a, b] : g.edges()) {
    ++out[g.name(a)];
    ++out[g.name(b)];
  }
  return out;
}

MarkPattern marks(const std::string& s) { return parse_pattern(s); }

}  // namespace

TEST(ShiodaInose, S3Census) {
  const CurveGraph& g = host_graph(Surface::S3, 3);
  EXPECT_EQ(g.size(), 24u);
  EXPECT_EQ(g.edges().size(), 27u);
  EXPECT_EQ(g.curves_with(Mark::kFixed).size(), 6u);
  EXPECT_EQ(g.curves_with(Mark::kStable).size(), 18u);
  EXPECT_EQ(g.isolated_points().size(), 9u);
  EXPECT_TRUE(g.swapped_pairs().empty());
  const CountIdentity identity = solve_count_identity(3);
  EXPECT_EQ(identity.solve_first({6}), Rational(9));
}

TEST(ShiodaInose, S3Degrees) {
  const CurveGraph& g = host_graph(Surface::S3, 3);
  for (const auto& [name, degree] : degrees(g)) {
    const int expected = (name[0] == 'F' || name[0] == 'G') ? 3 : 2;
    EXPECT_EQ(degree, expected) << name;
    EXPECT_EQ(g.degree(g.id(name)), expected) << name;
    const auto mark = g.label(g.id(name));
    ASSERT_TRUE(mark.has_value());
    EXPECT_EQ(*mark, expected == 3 ? Mark::kFixed : Mark::kStable) << name;
  }
}

TEST(ShiodaInose, S2Degrees) {
  for (int index : {2, 4}) {
    const CurveGraph& g = host_graph(Surface::S2, index);
    EXPECT_EQ(g.size(), 24u);
    for (const auto& [name, degree] : degrees(g)) {
      int expected = 2;
      if (name == "F2" || name == "G2") {
        expected = 4;
      } else if (name[0] == 'F' || name[0] == 'G') {
        expected = 3;
      }
      EXPECT_EQ(degree, expected) << name;
    }
  }
}

TEST(ShiodaInose, S2Labels) {
  const CurveGraph& g2 = host_graph(Surface::S2, 2);
  EXPECT_EQ(g2.curves_with(Mark::kFixed).size(), 10u);
  EXPECT_EQ(g2.curves_with(Mark::kStable).size(), 14u);
  EXPECT_TRUE(g2.isolated_points().empty());
  for (const auto& n : {"F1", "F2", "F3", "G1", "G2", "G3", "H11", "H13", "H31", "H33"}) {
    EXPECT_EQ(g2.label(g2.id(n)), Mark::kFixed) << n;
  }

  const CurveGraph& g4 = host_graph(Surface::S2, 4);
  EXPECT_EQ(g4.curves_with(Mark::kFixed).size(), 4u);
  EXPECT_EQ(g4.curves_with(Mark::kSquareFixed).size(), 6u);
  EXPECT_EQ(g4.curves_with(Mark::kStable).size(), 12u);
  ASSERT_EQ(g4.swapped_pairs().size(), 1u);
  EXPECT_TRUE(g4.is_swapped(g4.id("E22")));
  EXPECT_TRUE(g4.is_swapped(g4.id("E'22")));
  EXPECT_FALSE(g4.label(g4.id("E22")).has_value());
  for (const auto& n : {"F1", "F3", "G1", "G3"}) EXPECT_EQ(g4.label(g4.id(n)), Mark::kFixed) << n;
  for (const auto& n : {"F2", "G2", "H11", "H13", "H31", "H33"}) {
    EXPECT_EQ(g4.label(g4.id(n)), Mark::kSquareFixed) << n;
  }
  // M = 2N + 4 with N = 4.
  EXPECT_EQ(g4.isolated_points().size(), 12u);
}

TEST(ShiodaInose, CurveIdsFollowByteOrder) {
  const CurveGraph& g = host_graph(Surface::S3, 3);
  EXPECT_LT(g.id("E'11"), g.id("E11"));
  EXPECT_LT(g.id("E11"), g.id("F1"));
  EXPECT_TRUE(std::is_sorted(g.curves().begin(), g.curves().end()));
  EXPECT_FALSE(g.find("X9").has_value());
  EXPECT_THROW(g.id("X9"), UnknownCurveName);
}

TEST(ShiodaInose, UnsupportedCombinations) {
  EXPECT_THROW(host_graph(Surface::S3, 2), UnsupportedCombination);
  EXPECT_THROW(host_graph(Surface::S2, 3), UnsupportedCombination);
  EXPECT_THROW(host_graph(Surface::S2, 6), UnsupportedCombination);
  EXPECT_THROW(parse_surface("S4"), UnsupportedCombination);
  EXPECT_EQ(parse_surface("S2"), Surface::S2);
  EXPECT_EQ(surface_name(Surface::S3), "S3");
}

TEST(ShiodaInose, ValidateChain) {
  const std::vector<std::string> case_i{"E33", "G3",  "E13", "E'13", "F1",  "E'11",
                                        "E11", "G1",  "E31", "E'31", "F3",  "E'32",
                                        "E32", "G2",  "E22", "E'22", "F2",  "E'21"};
  EXPECT_TRUE(validate_chain(Surface::S3, 3, case_i, marks("s-f-s-s-f-s-s-f-s-s-f-s-s-f-s-s-f-s")));
  // Wrong marks, repeated curve, missing edge, chord.
  EXPECT_FALSE(validate_chain(Surface::S3, 3, case_i, marks("f-s-s-f-s-s-f-s-s-f-s-s-f-s-s-f-s-s")));
  EXPECT_FALSE(validate_chain(Surface::S3, 3, {"E33", "G3", "E33"}, marks("s-f-s")));
  EXPECT_FALSE(validate_chain(Surface::S3, 3, {"E33", "G1"}, marks("s-f")));
  EXPECT_FALSE(validate_chain(Surface::S3, 3, {"E13", "G3", "E33", "E'33", "F3", "E'31", "E31", "G1", "E11", "E'11", "F1", "E'13"},
                              marks("s-f-s-s-f-s-s-f-s-s-f-s")));
  EXPECT_THROW(validate_chain(Surface::S3, 3, {"E33", "Q1"}, marks("s-f")), UnknownCurveName);

  const std::vector<std::string> first{"H11", "E'11", "F1", "E12", "G2", "E32", "F3", "E'33", "H33"};
  const std::vector<std::string> second{"H13", "E13", "G3", "E'23", "F2", "E'21", "G1", "E31", "H31"};
  EXPECT_TRUE(validate_chain(Surface::S2, 4, first, marks("h-s-f-s-h-s-f-s-h")));
  EXPECT_TRUE(validate_chain(Surface::S2, 4, second, marks("h-s-f-s-h-s-f-s-h")));
  EXPECT_TRUE(validate_chain(Surface::S2, 2, first, marks("f-s-f-s-f-s-f-s-f")));
}

TEST(ShiodaInose, ValidateForkedChain) {
  const CurveGraph& g = host_graph(Surface::S3, 3);
  const DynkinComponent d18 = make_component(Kind::D, 18);
  const std::vector<std::string> case_ii{"E'11", "E'12", "F1", "E'13", "E13", "G3",
                                         "E33",  "E'33", "F3", "E'31", "E31", "G1",
                                         "E21",  "E'21", "F2", "E'22", "E22", "G2"};
  EXPECT_TRUE(validate_chain(g, d18, case_ii, marks("s s > f-s-s-f-s-s-f-s-s-f-s-s-f-s-s-f")));
  EXPECT_FALSE(validate_chain(g, make_component(Kind::A, 18), case_ii,
                              marks("s-s-f-s-s-f-s-s-f-s-s-f-s-s-f-s-s-f")));
}
