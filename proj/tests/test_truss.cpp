#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "dtruss/truss.hpp"
#include "graph_fixtures.hpp"
#include "oracles.hpp"

namespace dtruss {
namespace {

std::vector<TrussNumber> all(std::size_t m, TrussNumber k) { return std::vector<TrussNumber>(m, k); }

TEST(TrussNumbers, ThreeCycle) {
  const DirectedGraph g = testing::three_cycle();
  const TrussAssignment c = truss_numbers(g, TrussType::cycle);
  EXPECT_EQ(c.truss_number, all(3, 1));
  EXPECT_EQ(c.k_max, 1u);
  EXPECT_EQ(truss_numbers(g, TrussType::flow).truss_number, all(3, 0));
}

TEST(TrussNumbers, BidirectionalK4) {
  const DirectedGraph g = testing::complete_bidirectional(4);
  EXPECT_EQ(truss_numbers(g, TrussType::cycle).truss_number, all(12, 2));
  EXPECT_EQ(truss_numbers(g, TrussType::flow).truss_number, all(12, 6));
}

TEST(TrussNumbers, CompleteGraphIdentity) {
  for (std::size_t n = 3; n <= 8; ++n) {
    const DirectedGraph g = testing::complete_bidirectional(n);
    const auto k = static_cast<TrussNumber>(n - 2);
    EXPECT_EQ(truss_numbers(g, TrussType::cycle).truss_number, all(g.edge_count(), k)) << n;
    EXPECT_EQ(truss_numbers(g, TrussType::flow).truss_number, all(g.edge_count(), 3 * k)) << n;
  }
}

TEST(TrussNumbers, EmptyGraph) {
  const DirectedGraph g;
  const TrussAssignment a = truss_numbers(g, TrussType::flow);
  EXPECT_TRUE(a.truss_number.empty());
  EXPECT_EQ(a.k_max, 0u);
  EXPECT_EQ(naive_truss_numbers(g, TrussType::flow), a);
}

TEST(TrussNumbers, DagHasNoCycleTruss) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const DirectedGraph r = testing::random_digraph(12, 0.5, rng);
    std::vector<Edge> forward;
    for (const Edge& e : r.edges())
      if (e.source < e.target) forward.push_back(e);
    const DirectedGraph dag(r.node_count(), std::move(forward));
    EXPECT_EQ(max_truss_number(dag, TrussType::cycle), 0u);
  }
}

TEST(NaiveTrussNumbers, FeedForward) {
  EXPECT_EQ(naive_truss_numbers(testing::feed_forward(), TrussType::flow).truss_number, all(3, 1));
}

TEST(NaiveTrussNumbers, TwoCyclesSharingANode) {
  // 0->1->2->0 and 2->3->4->2; each edge lies in exactly one cycle.
  const DirectedGraph g = testing::from_pairs(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  EXPECT_EQ(naive_truss_numbers(g, TrussType::cycle).truss_number, all(6, 1));
  EXPECT_EQ(truss_numbers(g, TrussType::cycle).truss_number, all(6, 1));
  EXPECT_EQ(k_truss_components(g, TrussType::cycle, 1).size(), 1u);
}

TEST(TrussNumbers, PendantEdgeHasZero) {
  // 3-cycle plus 3->0 into it.
  const DirectedGraph g = testing::from_pairs(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}});
  EXPECT_EQ(truss_numbers(g, TrussType::cycle).truss_number, (std::vector<TrussNumber>{1, 1, 1, 0}));
}

TEST(TrussNumbers, MatchesNaiveOnRandomGraphs) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const DirectedGraph g = testing::random_digraph(8, 0.1 + 0.1 * (trial % 9), rng);
    for (TrussType t : {TrussType::cycle, TrussType::flow}) {
      EXPECT_EQ(truss_numbers(g, t), naive_truss_numbers(g, t)) << "trial " << trial;
    }
  }
}

TEST(TrussNumbers, NeverExceedsInitialSupport) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 30; ++trial) {
    const DirectedGraph g = testing::random_digraph(20, 0.25, rng);
    for (TrussType t : {TrussType::cycle, TrussType::flow}) {
      const auto s = support(g, t);
      const auto a = truss_numbers(g, t);
      for (EdgeId e = 0; e < g.edge_count(); ++e) EXPECT_LE(a.truss_number[e], s[e]);
    }
  }
}

TEST(TrussNumbers, TypesAreIndependent) {
  std::mt19937_64 rng(4);
  const DirectedGraph g = testing::random_digraph(30, 0.2, rng);
  const TrussAssignment before = truss_numbers(g, TrussType::cycle);
  truss_numbers(g, TrussType::flow);
  EXPECT_EQ(truss_numbers(g, TrussType::cycle), before);
}

TEST(KTrussComponents, LevelZeroIsWeakComponents) {
  const DirectedGraph g = testing::from_text("a b\nc d\nd e\n");
  const auto comps = k_truss_components(g, TrussType::cycle, 0);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].edges, (std::vector<EdgeId>{0}));
  EXPECT_EQ(comps[1].nodes, (std::vector<NodeId>{2, 3, 4}));
}

TEST(KTrussComponents, BeyondKmaxIsEmpty) {
  EXPECT_TRUE(k_truss_components(testing::three_cycle(), TrussType::cycle, 2).empty());
}

TEST(KTrussComponents, DisjointTrianglesGiveSeparateComponents) {
  // Two 3-cycles sharing a node via a bridge edge that is in no cycle.
  const DirectedGraph g = testing::from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  const auto comps = k_truss_components(g, TrussType::cycle, 1);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].nodes, (std::vector<NodeId>{0, 1, 2}));
  EXPECT_EQ(comps[1].nodes, (std::vector<NodeId>{3, 4, 5}));
}

// Structural properties on random graphs.
class TrussProperties : public ::testing::TestWithParam<TrussType> {};

TEST_P(TrussProperties, HoldOnRandomGraphs) {
  const TrussType t = GetParam();
  std::mt19937_64 rng(t == TrussType::cycle ? 101 : 202);
  for (int trial = 0; trial < 60; ++trial) {
    const DirectedGraph g = testing::random_digraph(14, 0.15 + 0.05 * (trial % 10), rng);
    const TrussAssignment a = truss_numbers(g, t);
    std::vector<std::vector<TrussComponent>> levels;
    for (TrussNumber k = 0; k <= a.k_max + 1; ++k) levels.push_back(k_truss_components(g, a, k));
    EXPECT_TRUE(levels.back().empty());

    for (TrussNumber k = 0; k <= a.k_max; ++k) {
      std::set<EdgeId> seen;
      for (const TrussComponent& c : levels[k]) {
        // Edge-disjoint within a level.
        for (EdgeId e : c.edges) EXPECT_TRUE(seen.insert(e).second);

        // Internal support, rechecked with the dense-matrix oracle.
        std::vector<char> keep(g.edge_count(), 0);
        for (EdgeId e : c.edges) keep[e] = 1;
        const auto brute = testing::brute_census(g, keep);
        const auto direct = internal_support(g, c);
        for (std::size_t i = 0; i < c.edges.size(); ++i) {
          const auto b = t == TrussType::cycle ? brute.cycle[c.edges[i]] : brute.flow[c.edges[i]];
          EXPECT_EQ(direct[i], b);
          EXPECT_GE(b, k);
        }

        // Weakly connected, and strongly connected for cycle trusses with k >= 1.
        const DirectedGraph sub = induced_subgraph(g, c.edges);
        EXPECT_EQ(weakly_connected_components(sub).count, 1u);
        if (t == TrussType::cycle && k >= 1) EXPECT_EQ(strongly_connected_components(sub).count, 1u);

        // Nested in exactly one component of the level below.
        if (k > 0) {
          std::size_t hosts = 0;
          for (const TrussComponent& lower : levels[k - 1]) {
            if (std::includes(lower.edges.begin(), lower.edges.end(), c.edges.begin(), c.edges.end())) ++hosts;
          }
          EXPECT_EQ(hosts, 1u);
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(BothTypes, TrussProperties, ::testing::Values(TrussType::cycle, TrussType::flow),
                         [](const auto& info) { return std::string(to_string(info.param)); });

}  // namespace
}  // namespace dtruss
