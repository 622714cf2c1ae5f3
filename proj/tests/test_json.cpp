#include <gtest/gtest.h>

#include "enriques18/errors.hpp"
#include "enriques18/report_json.hpp"

using namespace enriques18;

namespace {

template <typename T>
T round_trip(const T& value) {
  return Json::parse(Json(value).dump()).get<T>();
}

}  // namespace

TEST(Json, Configuration) {
  const Configuration c = parse_configuration("A3+D6+D9");
  EXPECT_EQ(round_trip(c), c);
  EXPECT_EQ(Json(c)["name"], "D6+D9+A3");
  Json bad = Json(c);
  bad["name"] = "D9+D9";
  EXPECT_THROW(bad.get<Configuration>(), InvalidConfiguration);
}

TEST(Json, Labeling) {
  const Configuration c = parse_configuration("A5+A13");
  for (const auto& l : enumerate_labelings(c, 4)) EXPECT_EQ(round_trip(l), l);
}

TEST(Json, CandidateLists) {
  for (int index : {2, 3, 4, 6}) {
    const CandidateList list = enumerate_types(index);
    EXPECT_EQ(round_trip(list), list) << index;
  }
}

TEST(Json, Reports) {
  for (int index : {2, 3, 4, 6}) {
    const ClassificationReport report = classify(index);
    EXPECT_EQ(round_trip(report), report) << index;
  }
}

TEST(Json, Order6) {
  const Order6Trace trace = order6_impossibility_trace();
  EXPECT_EQ(round_trip(trace), trace);
  EXPECT_EQ(round_trip(trace.system.delta), trace.system.delta);
  EXPECT_EQ(Json(trace.system.delta)["text"], "-c - p - q + 2");
  for (const auto& v : trace.survivors) EXPECT_EQ(round_trip(v), v);
  EXPECT_THROW(parse_order6_outcome("nope"), Error);
}

TEST(Json, GoldenDiff) {
  GoldenDiff diff;
  diff.index = 3;
  diff.unexpected_realized = {"D18"};
  diff.missing_indeterminate = {"D9+D9"};
  EXPECT_EQ(round_trip(diff), diff);
}

TEST(Json, HostGraphExport) {
  const Json g = host_graph_json(host_graph(Surface::S2, 4));
  EXPECT_EQ(g["surface"], "S2");
  EXPECT_EQ(g["vertices"].size(), 24u);
  EXPECT_EQ(g["edges"].size(), 28u);
  EXPECT_EQ(g["labels"]["F1"], "f");
  EXPECT_EQ(g["labels"]["F2"], "h");
  EXPECT_TRUE(g["labels"]["E22"].is_null());
  EXPECT_EQ(g["swapped_pairs"].size(), 1u);
  EXPECT_EQ(g["isolated_points"].size(), 12u);
}

TEST(Json, CountIdentityExport) {
  const Json j = count_identity_json(solve_count_identity(3));
  EXPECT_EQ(j["relation"], "M - N = 3");
  EXPECT_EQ(j["solved"], "M = N + 3");
  EXPECT_EQ(j["fixed_locus_terms"].size(), 2u);
}
