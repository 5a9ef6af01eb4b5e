#include "dtruss/randomization.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace dtruss {

RewireConfig RewireConfig::resolved(std::size_t edge_count) const {
  RewireConfig r = *this;
  const auto scaled = [edge_count](double per_edge) {
    return static_cast<std::uint64_t>(std::llround(per_edge * static_cast<double>(edge_count)));
  };
  if (r.target_successful_swaps == 0) r.target_successful_swaps = scaled(swaps_per_edge);
  if (r.max_attempts == 0) r.max_attempts = scaled(max_attempts_per_edge);
  if (r.max_attempts < r.target_successful_swaps)
    throw std::invalid_argument("max_attempts must be >= target_successful_swaps");
  return r;
}

DirectedGraph rewire(const DirectedGraph& g, const RewireConfig& cfg, RewireStats* stats) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  RewireStats local;
  const std::size_t m = edges.size();
  if (m >= 2) {
    const RewireConfig budget = cfg.resolved(m);
    auto key = [](NodeId u, NodeId v) { return (static_cast<std::uint64_t>(u) << 32) | v; };
    std::unordered_set<std::uint64_t> present;
    present.reserve(m * 2);
    for (const Edge& e : edges) present.insert(key(e.source, e.target));

    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    std::uniform_int_distribution<std::size_t> pick_other(0, m - 2);
    while (local.successes < budget.target_successful_swaps && local.attempts < budget.max_attempts) {
      ++local.attempts;
      const std::size_t x = pick(rng);
      std::size_t y = pick_other(rng);
      if (y >= x) ++y;  // uniform over the m-1 edges other than x
      const auto [a, b] = edges[x];
      const auto [c, d] = edges[y];
      if (a == d || c == b) continue;
      if (present.count(key(a, d)) || present.count(key(c, b))) continue;
      present.erase(key(a, b));
      present.erase(key(c, d));
      present.insert(key(a, d));
      present.insert(key(c, b));
      edges[x].target = d;
      edges[y].target = b;
      ++local.successes;
    }
  }
  if (stats) *stats = local;
  return DirectedGraph(g.node_count(), std::move(edges),
                       std::vector<std::string>(g.tokens().begin(), g.tokens().end()),
                       std::vector<std::optional<std::string>>(g.labels().begin(), g.labels().end()));
}

std::uint64_t sample_seed(std::uint64_t master, std::uint64_t index) noexcept {
  std::uint64_t z = master + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Cumulative edge counts per k; the last entry equals |E|.
std::vector<std::uint64_t> cumulative_counts(const TrussAssignment& a) {
  std::vector<std::uint64_t> cum(static_cast<std::size_t>(a.k_max) + 1, 0);
  for (TrussNumber k : a.truss_number) ++cum[k];
  for (std::size_t k = 1; k < cum.size(); ++k) cum[k] += cum[k - 1];
  return cum;
}

EnsembleCdf reduce(TrussType t, const std::vector<std::vector<std::uint64_t>>& cums,
                   std::uint64_t edge_count) {
  EnsembleCdf out;
  out.type = t;
  out.sample_count = cums.size();
  std::size_t width = 0;
  for (const auto& c : cums) {
    width = std::max(width, c.size());
    out.per_sample_kmax.push_back(static_cast<TrussNumber>(c.size() - 1));
  }
  // Every sample has the same |E|, so the mean CDF is a ratio of integer sums.
  const double denom = static_cast<double>(edge_count) * static_cast<double>(cums.size());
  out.mean_cdf.resize(width);
  for (std::size_t k = 0; k < width; ++k) {
    std::uint64_t total = 0;
    for (const auto& c : cums) total += k < c.size() ? c[k] : edge_count;
    out.mean_cdf[k] = static_cast<double>(total) / denom;
  }
  return out;
}

EnsembleCdfs run_ensemble(const DirectedGraph& g, std::size_t samples, const RewireConfig& cfg,
                          Execution exec, bool want_cycle, bool want_flow) {
  if (samples == 0) throw std::invalid_argument("ensemble needs at least one sample");
  if (g.empty()) throw std::invalid_argument("ensemble needs a graph with edges");

  std::vector<std::vector<std::uint64_t>> cycle(samples), flow(samples);
  const auto n = static_cast<std::ptrdiff_t>(samples);
  auto run_sample = [&](std::ptrdiff_t i) {
    RewireConfig c = cfg;
    c.seed = sample_seed(cfg.seed, static_cast<std::uint64_t>(i));
    const DirectedGraph r = rewire(g, c);
    const auto slot = static_cast<std::size_t>(i);
    if (want_cycle) cycle[slot] = cumulative_counts(truss_numbers(r, TrussType::cycle));
    if (want_flow) flow[slot] = cumulative_counts(truss_numbers(r, TrussType::flow));
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i) run_sample(i);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) run_sample(i);
  }
  EnsembleCdfs out;
  if (want_cycle) out.cycle = reduce(TrussType::cycle, cycle, g.edge_count());
  if (want_flow) out.flow = reduce(TrussType::flow, flow, g.edge_count());
  return out;
}

}  // namespace

EnsembleCdfs ensemble_truss_cdfs(const DirectedGraph& g, std::size_t samples,
                                 const RewireConfig& cfg, Execution exec) {
  return run_ensemble(g, samples, cfg, exec, true, true);
}

EnsembleCdf ensemble_truss_cdf(const DirectedGraph& g, TrussType t, std::size_t samples,
                               const RewireConfig& cfg, Execution exec) {
  EnsembleCdfs both =
      run_ensemble(g, samples, cfg, exec, t == TrussType::cycle, t == TrussType::flow);
  return t == TrussType::cycle ? std::move(both.cycle) : std::move(both.flow);
}

}  // namespace dtruss
