#include "dtruss/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace dtruss {

double TrussDistribution::f(std::size_t k) const noexcept {
  if (k >= counts.size() || edge_count == 0) return 0.0;
  return static_cast<double>(counts[k]) / static_cast<double>(edge_count);
}

double TrussDistribution::F(std::size_t k) const noexcept {
  if (k >= counts.size()) return 1.0;
  std::uint64_t cum = 0;
  for (std::size_t i = 0; i <= k; ++i) cum += counts[i];
  return static_cast<double>(cum) / static_cast<double>(edge_count);
}

std::vector<double> TrussDistribution::frequencies() const {
  std::vector<double> out(counts.size());
  for (std::size_t k = 0; k < counts.size(); ++k) out[k] = f(k);
  return out;
}

std::vector<double> TrussDistribution::cdf() const {
  std::vector<double> out(counts.size());
  std::uint64_t cum = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    cum += counts[k];
    out[k] = static_cast<double>(cum) / static_cast<double>(edge_count);
  }
  return out;
}

TrussDistribution truss_distribution(const TrussAssignment& a) {
  if (a.truss_number.empty()) throw std::invalid_argument("truss distribution of an empty edge set");
  TrussDistribution d;
  d.type = a.type;
  d.edge_count = a.truss_number.size();
  d.k_max = *std::max_element(a.truss_number.begin(), a.truss_number.end());
  d.counts.assign(static_cast<std::size_t>(d.k_max) + 1, 0);
  for (TrussNumber k : a.truss_number) ++d.counts[k];
  std::uint64_t cum = 0;
  for (std::size_t k = 0; k < d.counts.size(); ++k) {
    cum += d.counts[k];
    if (2 * cum >= d.edge_count) {
      d.k_med = static_cast<TrussNumber>(k);
      break;
    }
  }
  return d;
}

DMeasure d_measure(std::span<const double> orig_cdf, std::span<const double> rand_cdf) {
  auto at = [](std::span<const double> cdf, std::size_t k) { return k < cdf.size() ? cdf[k] : 1.0; };
  const std::size_t limit = std::max(orig_cdf.size(), rand_cdf.size());
  std::size_t cutoff = 0;
  while (cutoff < limit && !(at(orig_cdf, cutoff) > 0.9 && at(rand_cdf, cutoff) > 0.9)) ++cutoff;

  DMeasure d;
  d.cutoff = cutoff;
  double sum = 0.0;
  for (std::size_t k = 0; k <= cutoff; ++k) sum += at(rand_cdf, k) - at(orig_cdf, k);
  if (cutoff == 0) {
    d.degenerate = true;
    d.value = sum;
  } else {
    d.value = sum / static_cast<double>(cutoff);
  }
  return d;
}

DMeasure d_measure(const TrussDistribution& orig, const EnsembleCdf& rand) {
  const std::vector<double> cdf = orig.cdf();
  return d_measure(cdf, rand.mean_cdf);
}

RMeasure r_measure(const TrussAssignment& cycle, const TrussAssignment& flow) {
  if (cycle.edge_count() != flow.edge_count())
    throw std::invalid_argument("cycle and flow assignments cover different edge sets");
  RMeasure r;
  if (cycle.truss_number.empty()) return r;
  r.k_med_cycle = truss_distribution(cycle).k_med;
  r.k_med_flow = truss_distribution(flow).k_med;
  for (std::size_t e = 0; e < cycle.edge_count(); ++e) {
    const bool high_c = cycle.truss_number[e] > r.k_med_cycle;
    const bool high_f = flow.truss_number[e] > r.k_med_flow;
    r.both += high_c && high_f;
    r.either += high_c || high_f;
  }
  if (r.either > 0) r.value = static_cast<double>(r.both) / static_cast<double>(r.either);
  return r;
}

double reciprocity(const DirectedGraph& g) {
  if (g.empty()) throw std::invalid_argument("reciprocity of an edgeless graph");
  std::uint64_t reciprocated_edges = 0;
  for (const Edge& e : g.edges()) reciprocated_edges += g.has_edge(e.target, e.source);
  // Each reciprocated pair contributes two edges, which is exactly 2 * pairs.
  return static_cast<double>(reciprocated_edges) / static_cast<double>(g.edge_count());
}

JointDistribution joint_distribution(const TrussAssignment& cycle, const TrussAssignment& flow) {
  if (cycle.edge_count() != flow.edge_count())
    throw std::invalid_argument("cycle and flow assignments cover different edge sets");
  JointDistribution j;
  j.edge_count = cycle.edge_count();
  if (j.edge_count == 0) return j;
  j.rows = static_cast<std::size_t>(*std::max_element(cycle.truss_number.begin(), cycle.truss_number.end())) + 1;
  j.cols = static_cast<std::size_t>(*std::max_element(flow.truss_number.begin(), flow.truss_number.end())) + 1;
  j.counts.assign(j.rows * j.cols, 0);
  for (std::size_t e = 0; e < j.edge_count; ++e) ++j.counts[cycle.truss_number[e] * j.cols + flow.truss_number[e]];
  return j;
}

std::vector<std::uint64_t> JointDistribution::cycle_marginal() const {
  std::vector<std::uint64_t> m(rows, 0);
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t b = 0; b < cols; ++b) m[a] += count(a, b);
  return m;
}

std::vector<std::uint64_t> JointDistribution::flow_marginal() const {
  std::vector<std::uint64_t> m(cols, 0);
  for (std::size_t a = 0; a < rows; ++a)
    for (std::size_t b = 0; b < cols; ++b) m[b] += count(a, b);
  return m;
}

}  // namespace dtruss
