#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dtruss/metrics.hpp"
#include "graph_fixtures.hpp"

namespace dtruss {
namespace {

TrussAssignment assignment(TrussType t, std::vector<TrussNumber> k) {
  TrussAssignment a{t, std::move(k), 0};
  if (!a.truss_number.empty()) a.k_max = *std::max_element(a.truss_number.begin(), a.truss_number.end());
  return a;
}

TEST(TrussDistribution, AllOnes) {
  const TrussDistribution d = truss_distribution(assignment(TrussType::cycle, {1, 1, 1, 1}));
  EXPECT_EQ(d.f(1), 1.0);
  EXPECT_EQ(d.F(0), 0.0);
  EXPECT_EQ(d.F(1), 1.0);
  EXPECT_EQ(d.k_med, 1u);
  EXPECT_EQ(d.k_max, 1u);
}

TEST(TrussDistribution, CycleWithPendantEdge) {
  const DirectedGraph g = testing::from_pairs(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}});
  const TrussDistribution d = truss_distribution(truss_numbers(g, TrussType::cycle));
  EXPECT_DOUBLE_EQ(d.f(0), 0.25);
  EXPECT_DOUBLE_EQ(d.f(1), 0.75);
  EXPECT_EQ(d.k_med, 1u);
}

TEST(TrussDistribution, MedianAtExactHalf) {
  // F(0) = 2/4 satisfies F >= 1/2.
  EXPECT_EQ(truss_distribution(assignment(TrussType::flow, {0, 0, 3, 3})).k_med, 0u);
}

TEST(TrussDistribution, Invariants) {
  std::mt19937_64 rng(3);
  const DirectedGraph g = testing::random_digraph(40, 0.2, rng);
  const TrussDistribution d = truss_distribution(truss_numbers(g, TrussType::flow));
  const auto F = d.cdf();
  EXPECT_TRUE(std::is_sorted(F.begin(), F.end()));
  EXPECT_EQ(F.back(), 1.0);
  for (std::size_t k = 1; k < F.size(); ++k) EXPECT_NEAR(d.f(k), F[k] - F[k - 1], 1e-12);
}

TEST(TrussDistribution, EmptyThrows) {
  EXPECT_THROW(truss_distribution(assignment(TrussType::cycle, {})), std::invalid_argument);
}

TEST(DMeasure, IdenticalCdfsGiveZero) {
  const std::vector<double> F{0.2, 0.5, 0.95, 1.0};
  const DMeasure d = d_measure(F, F);
  EXPECT_EQ(d.value, 0.0);
  EXPECT_EQ(d.cutoff, 2u);
}

TEST(DMeasure, HandEvaluatedExample) {
  const std::vector<double> orig{0.5, 0.8, 0.95};
  const std::vector<double> rand{0.95, 1.0, 1.0};
  const DMeasure d = d_measure(orig, rand);
  EXPECT_EQ(d.cutoff, 2u);
  // ((0.95 - 0.5) + (1 - 0.8) + (1 - 0.95)) / 2
  EXPECT_NEAR(d.value, 0.35, 1e-12);
  EXPECT_FALSE(d.degenerate);
}

TEST(DMeasure, StrictThresholdAtExactlyPointNine) {
  const std::vector<double> orig{0.9, 1.0};
  const std::vector<double> rand{0.95, 1.0};
  EXPECT_EQ(d_measure(orig, rand).cutoff, 1u);
}

TEST(DMeasure, DegenerateCutoffAtZero) {
  const std::vector<double> orig{0.95, 1.0};
  const std::vector<double> rand{0.99};
  const DMeasure d = d_measure(orig, rand);
  EXPECT_EQ(d.cutoff, 0u);
  EXPECT_TRUE(d.degenerate);
  EXPECT_NEAR(d.value, 0.04, 1e-12);
}

TEST(DMeasure, CdfsExtendedByOne) {
  // rand runs out after k = 0 and counts as 1 from then on.
  const std::vector<double> orig{0.1, 0.5, 0.95};
  const std::vector<double> rand{0.6};
  const DMeasure d = d_measure(orig, rand);
  EXPECT_EQ(d.cutoff, 2u);
  EXPECT_NEAR(d.value, ((0.6 - 0.1) + (1 - 0.5) + (1 - 0.95)) / 2, 1e-12);
}

TEST(DMeasure, AntisymmetricAndBounded) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    auto random_cdf = [&] {
      std::vector<double> c(1 + trial % 7);
      for (double& x : c) x = u(rng);
      std::sort(c.begin(), c.end());
      return c;
    };
    const auto a = random_cdf();
    const auto b = random_cdf();
    const DMeasure ab = d_measure(a, b);
    const DMeasure ba = d_measure(b, a);
    EXPECT_EQ(ab.cutoff, ba.cutoff);
    EXPECT_NEAR(ab.value, -ba.value, 1e-12);
    EXPECT_GE(ab.value, -1.0);
    EXPECT_LE(ab.value, 1.0);
  }
}

TEST(DMeasure, FromDistributionAndEnsemble) {
  const TrussDistribution orig = truss_distribution(assignment(TrussType::flow, {0, 1, 2, 2}));
  EnsembleCdf rand;
  rand.mean_cdf = {0.5, 1.0};
  // F_orig = (0.25, 0.5, 1); K = 1 needs F_orig(1) > 0.9, fails; K = 2.
  const DMeasure d = d_measure(orig, rand);
  EXPECT_EQ(d.cutoff, 2u);
  EXPECT_NEAR(d.value, ((0.5 - 0.25) + (1 - 0.5) + 0.0) / 2, 1e-12);
}

TEST(RMeasure, HandExample) {
  // cycle: k_med = 0 (F(0) = 3/5); flow: k_med = 1 (F(1) = 3/5).
  const auto c = assignment(TrussType::cycle, {0, 0, 0, 2, 1});
  const auto f = assignment(TrussType::flow, {0, 1, 1, 3, 2});
  const RMeasure r = r_measure(c, f);
  EXPECT_EQ(r.k_med_cycle, 0u);
  EXPECT_EQ(r.k_med_flow, 1u);
  EXPECT_EQ(r.both, 2u);
  EXPECT_EQ(r.either, 2u);
  ASSERT_TRUE(r.value);
  EXPECT_EQ(*r.value, 1.0);
}

TEST(RMeasure, UniformValuesAreUndefined) {
  const RMeasure r = r_measure(assignment(TrussType::cycle, {2, 2, 2}), assignment(TrussType::flow, {5, 5, 5}));
  EXPECT_FALSE(r.value);
  EXPECT_EQ(r.either, 0u);
}

TEST(RMeasure, MismatchedEdgeSetsThrow) {
  EXPECT_THROW(r_measure(assignment(TrussType::cycle, {1}), assignment(TrussType::flow, {1, 2})),
               std::invalid_argument);
}

TEST(RMeasure, InvariantUnderEdgePermutationAndRoleSwap) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const DirectedGraph g = testing::random_digraph(25, 0.25, rng);
    const TrussAssignment c = truss_numbers(g, TrussType::cycle);
    const TrussAssignment f = truss_numbers(g, TrussType::flow);
    const RMeasure base = r_measure(c, f);
    const RMeasure swapped = r_measure(f, c);
    EXPECT_EQ(base.value, swapped.value);

    std::vector<std::size_t> perm(c.edge_count());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    TrussAssignment pc = c, pf = f;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      pc.truss_number[i] = c.truss_number[perm[i]];
      pf.truss_number[i] = f.truss_number[perm[i]];
    }
    EXPECT_EQ(r_measure(pc, pf).value, base.value);
    if (base.value) {
      EXPECT_GE(*base.value, 0.0);
      EXPECT_LE(*base.value, 1.0);
    }
  }
}

TEST(Reciprocity, Examples) {
  EXPECT_EQ(reciprocity(testing::bidirectional_pair()), 1.0);
  EXPECT_EQ(reciprocity(testing::three_cycle()), 0.0);
  EXPECT_DOUBLE_EQ(reciprocity(testing::from_pairs(3, {{0, 1}, {1, 0}, {1, 2}})), 2.0 / 3.0);
  EXPECT_THROW(reciprocity(DirectedGraph{}), std::invalid_argument);
}

TEST(Reciprocity, ReversalInvariant) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const DirectedGraph g = testing::random_digraph(20, 0.3, rng);
    if (g.empty()) continue;
    EXPECT_EQ(reciprocity(g), reciprocity(reversed(g)));
  }
}

TEST(JointDistribution, Examples) {
  const DirectedGraph cyc = testing::three_cycle();
  const auto j = joint_distribution(truss_numbers(cyc, TrussType::cycle), truss_numbers(cyc, TrussType::flow));
  EXPECT_EQ(j.rows, 2u);
  EXPECT_EQ(j.cols, 1u);
  EXPECT_EQ(j.frequency(1, 0), 1.0);

  const DirectedGraph k4 = testing::complete_bidirectional(4);
  const auto jk = joint_distribution(truss_numbers(k4, TrussType::cycle), truss_numbers(k4, TrussType::flow));
  EXPECT_EQ(jk.frequency(2, 6), 1.0);
}

TEST(JointDistribution, MarginalsMatchDistributions) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const DirectedGraph g = testing::random_digraph(30, 0.2, rng);
    if (g.empty()) continue;
    const TrussAssignment c = truss_numbers(g, TrussType::cycle);
    const TrussAssignment f = truss_numbers(g, TrussType::flow);
    const JointDistribution j = joint_distribution(c, f);
    EXPECT_EQ(j.cycle_marginal(), truss_distribution(c).counts);
    EXPECT_EQ(j.flow_marginal(), truss_distribution(f).counts);
    std::uint64_t total = 0;
    for (auto x : j.counts) total += x;
    EXPECT_EQ(total, g.edge_count());
  }
}

TEST(JointDistribution, MismatchThrows) {
  EXPECT_THROW(joint_distribution(assignment(TrussType::cycle, {1}), assignment(TrussType::flow, {})),
               std::invalid_argument);
}

}  // namespace
}  // namespace dtruss
