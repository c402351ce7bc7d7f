#include "zagreb/acene.hpp"

#include "gtest/gtest.h"
#include "support/oracles.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/indices.hpp"

namespace {

using zagreb::Graph;

TEST(AceneGraph, OneRingIsTheHexagon) {
  const Graph benzene = zagreb::acene_graph(1);
  EXPECT_EQ(benzene.vertex_count(), 6);
  EXPECT_EQ(benzene.edge_count(), 6);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(benzene.degree(v), 2);
  EXPECT_TRUE(zagreb::is_connected(benzene));
  EXPECT_EQ(zagreb::ehm(benzene), 96);
}

TEST(AceneGraph, NaphthaleneAndAnthracene) {
  const Graph naphthalene = zagreb::acene_graph(2);
  EXPECT_EQ(naphthalene.vertex_count(), 10);
  EXPECT_EQ(naphthalene.edge_count(), 11);

  const Graph anthracene = zagreb::acene_graph(3);
  EXPECT_EQ(anthracene.vertex_count(), 14);
  EXPECT_EQ(anthracene.edge_count(), 16);
  EXPECT_EQ(zagreb::ehm(anthracene), 772);
}

TEST(AceneGraph, CountLawsUpToTwentyRings) {
  for (int n = 1; n <= 20; ++n) {
    const Graph g = zagreb::acene_graph(n);
    EXPECT_EQ(g.vertex_count(), 4 * n + 2);
    EXPECT_EQ(g.edge_count(), 5 * n + 1);
    EXPECT_TRUE(zagreb::is_connected(g));
    int degree_two = 0, degree_three = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 2) ++degree_two;
      if (g.degree(v) == 3) ++degree_three;
    }
    EXPECT_EQ(degree_three, 2 * (n - 1));
    EXPECT_EQ(degree_two + degree_three, g.vertex_count());
  }
}

TEST(AceneGraph, RejectsZeroRings) {
  EXPECT_THROW(zagreb::acene_graph(0), zagreb::GraphError);
  EXPECT_THROW(zagreb::acene_graph(-3), zagreb::GraphError);
}

TEST(ChemicalFormula, FollowsTheFamilyPattern) {
  EXPECT_EQ(zagreb::acene_chemical_formula(2), "C10H8");
  EXPECT_EQ(zagreb::acene_chemical_formula(9), "C38H22");
  EXPECT_EQ(zagreb::acene_chemical_formula(10), "C42H24");
  EXPECT_EQ(zagreb::acene_chemical_formula(17), "C70H38");
}

TEST(PairClassHistogram, WorkedCases) {
  const zagreb::ClassHistogram three = zagreb::pair_class_histogram(
      zagreb::acene_graph(3));
  const zagreb::ClassHistogram expected_three{
      {{2, 2}, 4}, {{2, 3}, 4}, {{3, 3}, 6}, {{3, 4}, 8}};
  EXPECT_EQ(three, expected_three);

  const zagreb::ClassHistogram four = zagreb::pair_class_histogram(
      zagreb::acene_graph(4));
  const zagreb::ClassHistogram expected_four{
      {{2, 2}, 4}, {{2, 3}, 4}, {{3, 3}, 10}, {{3, 4}, 12}};
  EXPECT_EQ(four, expected_four);

  EXPECT_TRUE(
      zagreb::pair_class_histogram(zagreb::complete_graph(2)).empty());
}

TEST(PairClassHistogram, KeysAndCountsForTheFamily) {
  for (int n = 2; n <= 12; ++n) {
    const zagreb::ClassHistogram histogram =
        zagreb::pair_class_histogram(zagreb::acene_graph(n));
    const zagreb::ClassHistogram expected{{{2, 2}, 4},
                                          {{2, 3}, 4},
                                          {{3, 3}, 4ll * n - 6},
                                          {{3, 4}, 4ll * n - 4}};
    EXPECT_EQ(histogram, expected) << "n = " << n;
  }
}

TEST(PairClassHistogram, TotalEqualsPairCount) {
  for (const Graph& g : {zagreb::acene_graph(5), zagreb::complete_graph(4),
                         zagreb::path_graph(6)}) {
    std::int64_t total = 0;
    for (const auto& [key, count] : zagreb::pair_class_histogram(g))
      total += count;
    EXPECT_EQ(total, oracle::adjacent_pair_count(g));
  }
}

TEST(AceneEhmFormula, TabulatedValues) {
  EXPECT_EQ(zagreb::acene_ehm_formula(2), 432);
  EXPECT_EQ(zagreb::acene_ehm_formula(9), 2812);
  EXPECT_EQ(zagreb::acene_ehm_formula(17), 5532);
}

TEST(AceneEhmFormula, RefusesOneRing) {
  try {
    zagreb::acene_ehm_formula(1);
    FAIL() << "expected GraphError";
  } catch (const zagreb::GraphError& e) {
    // the one-ring exception is called out: enumeration 96, line 92
    EXPECT_NE(std::string(e.what()).find("96"), std::string::npos);
  }
}

TEST(AceneEhmFormula, AgreesWithEnumerationForTwoToTwelveRings) {
  for (int n = 2; n <= 12; ++n)
    EXPECT_EQ(zagreb::ehm(zagreb::acene_graph(n)),
              zagreb::acene_ehm_formula(n))
        << "n = " << n;
}

TEST(AceneRingClasses, WorkedCases) {
  EXPECT_EQ(zagreb::acene_ring_classes(3),
            (zagreb::AceneRingClasses{4, 4, 4, 2, 4, 4}));
  EXPECT_EQ(zagreb::acene_ring_classes(4),
            (zagreb::AceneRingClasses{4, 4, 4, 4, 8, 6}));
  EXPECT_EQ(zagreb::acene_ring_classes(2),
            (zagreb::AceneRingClasses{4, 4, 4, 0, 0, 2}));
  EXPECT_THROW(zagreb::acene_ring_classes(1), zagreb::GraphError);
}

TEST(AceneRingClasses, AggregateToTheDegreePairHistogram) {
  for (int n = 2; n <= 10; ++n) {
    const zagreb::AceneRingClasses classes = zagreb::acene_ring_classes(n);
    zagreb::ClassHistogram histogram =
        zagreb::pair_class_histogram(zagreb::acene_graph(n));
    EXPECT_EQ((histogram[{2, 2}]), classes.outer_22);
    EXPECT_EQ((histogram[{2, 3}]), classes.outer_23);
    EXPECT_EQ((histogram[{3, 3}]), classes.inner_33 + classes.fusion_33);
    EXPECT_EQ((histogram[{3, 4}]), classes.outer_34 + classes.inner_34);
  }
}

TEST(AceneRingClasses, WeightedSumReproducesTheIndex) {
  for (int n = 2; n <= 12; ++n) {
    std::int64_t weighted = 0;
    for (const auto& [key, count] :
         zagreb::pair_class_histogram(zagreb::acene_graph(n))) {
      const std::int64_t term = key.first + key.second;
      weighted += count * term * term;
    }
    EXPECT_EQ(weighted, 340ll * n - 248) << "n = " << n;
  }
}

}  // namespace
