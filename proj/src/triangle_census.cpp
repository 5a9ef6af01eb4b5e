#include "dtruss/triangle_census.hpp"

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dtruss {

std::string_view to_string(TriangleType t) noexcept {
  return t == TriangleType::cycle ? "cycle" : "flow";
}

TriangleType parse_triangle_type(std::string_view s) {
  if (s == "cycle") return TriangleType::cycle;
  if (s == "flow") return TriangleType::flow;
  throw std::invalid_argument("unknown triangle type '" + std::string(s) + "'");
}

std::vector<Support> support(const DirectedGraph& g, TriangleType t, Execution exec) {
  const auto m = static_cast<std::ptrdiff_t>(g.edge_count());
  std::vector<Support> s(g.edge_count(), 0);
  // Each edge counts its own occurrences, so the loop has no shared writes.
  auto count_edge = [&](std::ptrdiff_t e) {
    Support c = 0;
    for_each_triangle(g, static_cast<EdgeId>(e), t, [&c](EdgeId, EdgeId) { ++c; });
    s[static_cast<std::size_t>(e)] = c;
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 256)
    for (std::ptrdiff_t e = 0; e < m; ++e) count_edge(e);
  } else {
    for (std::ptrdiff_t e = 0; e < m; ++e) count_edge(e);
  }
  return s;
}

std::vector<Support> cycle_support(const DirectedGraph& g, Execution exec) {
  return support(g, TriangleType::cycle, exec);
}

std::vector<Support> flow_support(const DirectedGraph& g, Execution exec) {
  return support(g, TriangleType::flow, exec);
}

EdgeSupport edge_support(const DirectedGraph& g, Execution exec) {
  return {cycle_support(g, exec), flow_support(g, exec)};
}

TriangleTotals triangle_totals(const EdgeSupport& s) {
  const auto sum = [](const std::vector<Support>& v) {
    return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
  };
  return {sum(s.cycle) / 3, sum(s.flow) / 3};
}

TriangleTotals triangle_totals(const DirectedGraph& g) {
  return triangle_totals(edge_support(g));
}

namespace reference {

EdgeSupport enumerate_occurrences(const DirectedGraph& g, TriangleTotals* totals) {
  EdgeSupport s{std::vector<Support>(g.edge_count(), 0), std::vector<Support>(g.edge_count(), 0)};
  TriangleTotals t;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (const Incidence& uv : g.out(u)) {
      const NodeId v = uv.node;
      // Cycle u->v->w->u, counted once from its smallest node.
      if (v > u) {
        for (const Incidence& vw : g.out(v)) {
          const NodeId w = vw.node;
          if (w <= u) continue;
          if (const auto wu = g.find_edge(w, u)) {
            ++s.cycle[uv.edge];
            ++s.cycle[vw.edge];
            ++s.cycle[*wu];
            ++t.cycle_count;
          }
        }
      }
      // Flow with source u, middle v, sink w.
      for (const Incidence& uw : g.out(u)) {
        if (uw.node == v) continue;
        if (const auto vw = g.find_edge(v, uw.node)) {
          ++s.flow[uv.edge];
          ++s.flow[uw.edge];
          ++s.flow[*vw];
          ++t.flow_count;
        }
      }
    }
  }
  if (totals) *totals = t;
  return s;
}

}  // namespace reference

}  // namespace dtruss
