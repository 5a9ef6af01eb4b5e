#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dtruss/digraph.hpp"
#include "dtruss/randomization.hpp"
#include "dtruss/truss.hpp"

namespace dtruss {

/// Edge-frequency distribution of truss numbers, kept as exact counts.
/// f(k) = counts[k] / edge_count; F is the running sum of f.
struct TrussDistribution {
  TrussType type = TrussType::cycle;
  std::vector<std::uint64_t> counts;  // index k in [0, k_max]
  std::uint64_t edge_count = 0;
  TrussNumber k_max = 0;
  /// Smallest k with F(k) >= 1/2.
  TrussNumber k_med = 0;

  double f(std::size_t k) const noexcept;
  /// Cumulative; 1 for k > k_max.
  double F(std::size_t k) const noexcept;
  std::vector<double> frequencies() const;
  std::vector<double> cdf() const;
};

/// Throws std::invalid_argument for an empty assignment.
TrussDistribution truss_distribution(const TrussAssignment& a);

struct DMeasure {
  double value = 0.0;
  std::size_t cutoff = 0;   // K
  bool degenerate = false;  // K == 0; value is F_rand(0) - F_orig(0)
};

/// D = (1/K) sum_{k=0..K} (F_rand(k) - F_orig(k)), with
/// K = min{k : F_orig(k) > 0.9 and F_rand(k) > 0.9}. Both CDFs are taken as 1
/// past their last entry.
DMeasure d_measure(std::span<const double> orig_cdf, std::span<const double> rand_cdf);
DMeasure d_measure(const TrussDistribution& orig, const EnsembleCdf& rand);

struct RMeasure {
  std::optional<double> value;  // empty when no edge exceeds either median
  std::uint64_t both = 0;       // numerator
  std::uint64_t either = 0;     // denominator
  TrussNumber k_med_cycle = 0;
  TrussNumber k_med_flow = 0;
};

/// Share of edges above both medians among edges above at least one (strict
/// inequalities). Throws std::invalid_argument on mismatched edge counts.
RMeasure r_measure(const TrussAssignment& cycle, const TrussAssignment& flow);

/// 2 * |reciprocated node pairs| / |E|. Throws std::invalid_argument on an
/// edgeless graph.
double reciprocity(const DirectedGraph& g);

/// Edge counts over (k^c, k^f) cells.
struct JointDistribution {
  std::size_t rows = 0;  // k^c_max + 1
  std::size_t cols = 0;  // k^f_max + 1
  std::vector<std::uint64_t> counts;  // row-major
  std::uint64_t edge_count = 0;

  std::uint64_t count(std::size_t kc, std::size_t kf) const { return counts[kc * cols + kf]; }
  double frequency(std::size_t kc, std::size_t kf) const {
    return static_cast<double>(count(kc, kf)) / static_cast<double>(edge_count);
  }
  std::vector<std::uint64_t> cycle_marginal() const;
  std::vector<std::uint64_t> flow_marginal() const;
};

JointDistribution joint_distribution(const TrussAssignment& cycle, const TrussAssignment& flow);

}  // namespace dtruss
