#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hgcage/girth.hpp"
#include "hgcage/hypergraph.hpp"

namespace hgcage {
namespace {

Hypergraph five_cycle() { return as_hypergraph(testing::cycle_graph(5)); }

TEST(Hypergraph, RejectsMalformedEdges) {
  EXPECT_THROW(Hypergraph(3, {{}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, {{0, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST(Hypergraph, DegreeProfiles) {
  auto p = degree_profile(testing::fano());
  EXPECT_EQ(p.degree, 3u);
  EXPECT_EQ(p.uniformity, 3u);
  p = degree_profile(five_cycle());
  EXPECT_EQ(p.degree, 2u);
  EXPECT_EQ(p.uniformity, 2u);
  p = degree_profile(Hypergraph(3, {{0, 1, 2}}));
  EXPECT_EQ(p.degree, 1u);
  EXPECT_EQ(p.uniformity, 3u);
  p = degree_profile(Hypergraph(4, {{0, 1, 2}, {2, 3}}));
  EXPECT_FALSE(p.degree);
  EXPECT_FALSE(p.uniformity);
}

TEST(Hypergraph, LeviOfFanoIsHeawood) {
  const auto l = levi(testing::fano());
  EXPECT_EQ(l.order(), 14u);
  EXPECT_EQ(graph_girth(l).girth, 6u);
  EXPECT_TRUE(testing::isomorphic(l, testing::heawood()));
}

TEST(Hypergraph, LeviOfSingleEdgeIsStar) {
  const auto l = levi(Hypergraph(3, {{0, 1, 2}}));
  EXPECT_EQ(l.order(), 4u);
  EXPECT_EQ(l.degree(3), 3u);
  EXPECT_FALSE(graph_girth(l).found());
}

TEST(Hypergraph, LeviOfFiveCycleIsTenCycle) {
  const auto l = levi(five_cycle());
  EXPECT_TRUE(testing::isomorphic(l, testing::cycle_graph(10)));
  EXPECT_EQ(graph_girth(l).girth, 10u);
}

TEST(Hypergraph, LeviColouring) {
  const auto h = Hypergraph(4, {{0, 1}, {1, 2, 3}});
  const auto l = levi(h);
  EXPECT_TRUE(l.adjacent(0, 4));
  EXPECT_TRUE(l.adjacent(3, 5));
  EXPECT_FALSE(l.adjacent(0, 5));
}

TEST(Hypergraph, DualIncidenceAndErrors) {
  const auto h = Hypergraph(4, {{0, 1}, {1, 2, 3}, {0, 3}});
  const auto d = dual(h);
  EXPECT_EQ(d.order(), 3u);
  EXPECT_EQ(d.size(), 4u);
  for (VertexId v = 0; v < 4; ++v) {
    for (EdgeId e = 0; e < 3; ++e) EXPECT_EQ(d.contains(v, e), h.contains(e, v));
  }
  // Vertices 2 and 3 of {0,1},{1,2,3} lie on the same edges.
  EXPECT_THROW(dual(Hypergraph(4, {{0, 1}, {1, 2, 3}})), std::invalid_argument);
  EXPECT_THROW(dual(Hypergraph(3, {{0, 1}})), std::invalid_argument);  // vertex 2 isolated
}

TEST(Hypergraph, FanoIsSelfDual) {
  const auto d = dual(testing::fano());
  const auto p = degree_profile(d);
  EXPECT_EQ(p.degree, 3u);
  EXPECT_EQ(p.uniformity, 3u);
  EXPECT_EQ(berge_girth(d).girth, 3u);
  EXPECT_TRUE(testing::isomorphic(d, testing::fano()));
}

TEST(Hypergraph, Linearity) {
  EXPECT_TRUE(is_linear(testing::fano()));
  EXPECT_FALSE(is_linear(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}})));
  EXPECT_TRUE(is_linear(as_hypergraph(testing::petersen())));
}

TEST(Hypergraph, FromIncidenceGraph) {
  const auto split = testing::colour_classes_first(testing::heawood());
  ASSERT_TRUE(split);
  ASSERT_EQ(split->second, 7u);
  const auto h = from_incidence_graph(split->first, 7);
  EXPECT_EQ(h.order(), 7u);
  EXPECT_TRUE(testing::isomorphic(h, testing::fano()));
  EXPECT_THROW(from_incidence_graph(testing::heawood(), 7), std::invalid_argument);  // LCF labels interleave
  EXPECT_FALSE(testing::colour_classes_first(testing::petersen()));
}

TEST(HypergraphProperty, DualIsAnInvolutionUpToIsomorphism) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const auto h = testing::random_hypergraph(rng, n, 2 + rng() % 5, 3);
    Hypergraph d;
    try {
      d = dual(h);
    } catch (const std::invalid_argument&) {
      continue;  // two vertices with identical incidence
    }
    EXPECT_TRUE(testing::isomorphic(dual(d), h));
  }
}

TEST(HypergraphProperty, LeviOfDualSwapsColourClasses) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    const auto h = testing::random_hypergraph(rng, n, 2 + rng() % 6, 4);
    Hypergraph d;
    try {
      d = dual(h);
    } catch (const std::invalid_argument&) {
      continue;
    }
    std::vector<int> colour_h(n + h.size(), 1), colour_d(n + h.size(), 0);
    std::fill(colour_h.begin(), colour_h.begin() + static_cast<long>(n), 0);
    std::fill(colour_d.begin(), colour_d.begin() + static_cast<long>(h.size()), 1);
    EXPECT_TRUE(testing::isomorphic(levi(h), levi(d), colour_h, colour_d));
  }
}

}  // namespace
}  // namespace hgcage
