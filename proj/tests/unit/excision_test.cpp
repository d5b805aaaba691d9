#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hgcage/excision.hpp"
#include "hgcage/girth.hpp"

namespace hgcage {
namespace {

// Cubic, simple (the Graph type enforces it), girth >= min_girth by an
// independent oracle.
void expect_valid_output(const Graph& g, std::size_t min_girth) {
  EXPECT_TRUE(g.is_regular(3));
  EXPECT_EQ(2 * g.size(), 3 * g.order());
  const auto girth = testing::edge_deletion_girth(g);
  ASSERT_TRUE(girth);
  EXPECT_GE(*girth, min_girth);
}

std::vector<std::vector<VertexId>> four_paths(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& [b, c] : g.edges()) {
    for (VertexId a : g.neighbors(b)) {
      for (VertexId d : g.neighbors(c)) {
        if (a != c && d != b && a != d) out.push_back({a, b, c, d});
      }
    }
  }
  return out;
}

TEST(Excision, BoundaryCountIdentity) {
  const auto g = testing::tutte_coxeter();
  for (std::size_t depth = 1; depth <= 2; ++depth) {
    const auto tree = ball(g, 0, depth);
    EXPECT_EQ(excision_boundary(g, tree).size(), tree.size() + 2);
  }
  for (const auto& path : four_paths(g)) EXPECT_EQ(excision_boundary(g, path).size(), 6u);
}

TEST(Excision, BoundaryRejectsBadTrees) {
  const auto g = testing::tutte_coxeter();
  const auto n = g.neighbors(0);
  EXPECT_THROW(excision_boundary(g, std::vector<VertexId>{0, n[0], n[1]}), ExcisionError);  // odd size
  EXPECT_THROW(excision_boundary(g, std::vector<VertexId>{}), ExcisionError);
  EXPECT_THROW(excision_boundary(g, std::vector<VertexId>{0, 15}), ExcisionError);  // not adjacent
  EXPECT_THROW(excision_boundary(g, std::vector<VertexId>{0, 0}), ExcisionError);
  EXPECT_THROW(excision_boundary(testing::cycle_graph(6), std::vector<VertexId>{0, 1}), ExcisionError);
  // In K4 every boundary vertex of an edge touches both ends.
  EXPECT_THROW(excision_boundary(testing::complete_graph(4), std::vector<VertexId>{0, 1}), ExcisionError);
}

TEST(Excision, TutteCoxeterStarGivesTwentySix) {
  const auto g = testing::tutte_coxeter();
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto out = excise_tree(g, ball(g, v, 1), 7);
    ASSERT_TRUE(out) << v;
    EXPECT_EQ(out->graph.order(), 26u);
    EXPECT_EQ(out->step.added.size(), 3u);
    expect_valid_output(out->graph, 7);
  }
}

// Checked separately by trying all 15 pairings of each path's boundary.
TEST(Excision, TutteCoxeterPathsAdmitNoPairing) {
  const auto g = testing::tutte_coxeter();
  for (const auto& path : four_paths(g)) EXPECT_FALSE(excise_tree(g, path, 7));
}

// Petersen is the smallest cubic graph of girth 5, so no excision keeps girth 5.
TEST(Excision, NoValidMatching) {
  const auto g = testing::petersen();
  for (VertexId v = 0; v < g.order(); ++v) EXPECT_FALSE(excise_tree(g, ball(g, v, 1), 5));
  // Every 4-vertex path lies on a 5-cycle, so its ends share a boundary vertex.
  for (const auto& path : four_paths(g)) EXPECT_THROW(excise_tree(g, path, 5), ExcisionError);
}

TEST(Excision, GreedyTutteCoxeter) {
  const auto g = testing::tutte_coxeter();
  const auto run = excise_greedy(g, 7);
  EXPECT_EQ(run.input_girth, 8u);
  EXPECT_LE(run.graph.order(), 26u);
  ASSERT_FALSE(run.steps.empty());
  std::size_t removed = 0;
  std::size_t order = g.order();
  for (const auto& step : run.steps) {
    removed += step.removed.size();
    EXPECT_LT(order - step.removed.size(), order);
    order -= step.removed.size();
  }
  EXPECT_EQ(run.graph.order(), g.order() - removed);
  expect_valid_output(run.graph, 7);
}

TEST(Excision, GreedyLeavesPetersenUnchanged) {
  const auto g = testing::petersen();
  const auto run = excise_greedy(g, 5);
  EXPECT_TRUE(run.steps.empty());
  EXPECT_EQ(run.graph, g);
}

TEST(Excision, GreedyWithGirthThreeRemovesFour) {
  const auto g = testing::heawood();
  const auto run = excise_greedy(g, 3);
  ASSERT_GE(run.steps.size(), 2u);  // a ball, then 4-trees
  std::size_t order = g.order() - run.steps[0].removed.size();
  for (std::size_t i = 1; i < run.steps.size(); ++i) {
    EXPECT_EQ(run.steps[i].removed.size(), 4u);
    order -= 4;
  }
  EXPECT_EQ(run.graph.order(), order);
  expect_valid_output(run.graph, 3);
}

TEST(Excision, GreedyRejectsLowGirthInput) {
  EXPECT_THROW(excise_greedy(testing::petersen(), 6), ExcisionError);
  EXPECT_THROW(excise_greedy(testing::cycle_graph(5), 3), ExcisionError);
}

TEST(ExcisionProperty, DeterministicForFixedSeed) {
  const auto g = testing::mcgee();
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const auto first = excise_greedy(g, 6, {.seed = seed});
    const auto second = excise_greedy(g, 6, {.seed = seed});
    EXPECT_EQ(first.graph, second.graph);
    EXPECT_EQ(first.steps.size(), second.steps.size());
  }
}

TEST(ExcisionProperty, OutputsSatisfyInvariantsAcrossSeeds) {
  for (const auto& [g, min_girth] : std::vector<std::pair<Graph, std::size_t>>{
           {testing::tutte_coxeter(), 7}, {testing::tutte_coxeter(), 6}, {testing::mcgee(), 6},
           {testing::heawood(), 5}, {testing::heawood(), 4}}) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const auto run = excise_greedy(g, min_girth, {.seed = seed});
      std::size_t removed = 0;
      for (const auto& s : run.steps) {
        removed += s.removed.size();
        EXPECT_EQ(s.removed.size() % 2, 0u);
        EXPECT_EQ(2 * s.added.size(), s.removed.size() + 2);
      }
      EXPECT_EQ(run.graph.order(), g.order() - removed);
      expect_valid_output(run.graph, min_girth);
    }
  }
}

}  // namespace
}  // namespace hgcage
