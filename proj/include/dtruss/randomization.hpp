#pragma once

#include <cstdint>
#include <vector>

#include "dtruss/digraph.hpp"
#include "dtruss/truss.hpp"

namespace dtruss {

/// Double-edge-swap budget. Zero budgets mean "derive from |E|" using the
/// per-edge multipliers.
struct RewireConfig {
  std::uint64_t target_successful_swaps = 0;
  std::uint64_t max_attempts = 0;
  std::uint64_t seed = 0;
  double swaps_per_edge = 10.0;
  double max_attempts_per_edge = 100.0;

  /// Budget with zero fields resolved against an edge count. Throws
  /// std::invalid_argument when max_attempts < target_successful_swaps.
  RewireConfig resolved(std::size_t edge_count) const;
};

struct RewireStats {
  std::uint64_t attempts = 0;
  std::uint64_t successes = 0;
};

/// Directed configuration-model sample by double-edge swaps: choose two
/// distinct edges (a->b), (c->d) uniformly, replace them by (a->d), (c->b)
/// unless that creates a self-loop or an existing edge. Stops after the
/// target number of successes or the attempt cap. Deterministic in cfg.seed.
/// Node tokens, labels and edge ids carry over; only targets move.
DirectedGraph rewire(const DirectedGraph& g, const RewireConfig& cfg, RewireStats* stats = nullptr);

/// Seed for ensemble member `index`, derived by SplitMix64 from the master seed.
std::uint64_t sample_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Mean truss-number CDF over an ensemble of rewired graphs.
struct EnsembleCdf {
  TrussType type = TrussType::cycle;
  std::size_t sample_count = 0;
  std::vector<double> mean_cdf;  // index k; implicitly 1 beyond the end
  std::vector<TrussNumber> per_sample_kmax;

  /// mean_cdf(k), extended by 1 past the recorded support.
  double at(std::size_t k) const noexcept { return k < mean_cdf.size() ? mean_cdf[k] : 1.0; }
  friend bool operator==(const EnsembleCdf&, const EnsembleCdf&) = default;
};

struct EnsembleCdfs {
  EnsembleCdf cycle;
  EnsembleCdf flow;
};

/// Generates `samples` rewired graphs (sample i seeded by
/// sample_seed(cfg.seed, i)), computes each one's truss-number CDF, and
/// averages pointwise. Samples run on OpenMP threads; the reduction is a
/// fixed-order integer sum, so results do not depend on the thread count.
/// Throws std::invalid_argument when samples == 0 or the graph has no edges.
EnsembleCdf ensemble_truss_cdf(const DirectedGraph& g, TrussType t, std::size_t samples,
                               const RewireConfig& cfg, Execution exec = Execution::parallel);

/// Both types from the same randomized graphs.
EnsembleCdfs ensemble_truss_cdfs(const DirectedGraph& g, std::size_t samples,
                                 const RewireConfig& cfg, Execution exec = Execution::parallel);

}  // namespace dtruss
