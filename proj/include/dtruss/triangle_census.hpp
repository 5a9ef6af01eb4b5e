#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dtruss/digraph.hpp"

namespace dtruss {

/// Directed triangle pattern. A cycle triangle is i->j->k->i; a flow
/// triangle (feed-forward loop) is a->b, a->c, b->c.
enum class TriangleType { cycle, flow };

std::string_view to_string(TriangleType t) noexcept;
/// Parses "cycle" / "flow"; throws std::invalid_argument otherwise.
TriangleType parse_triangle_type(std::string_view s);

enum class Execution { serial, parallel };

using Support = std::uint32_t;

/// Per-edge occurrence counts, indexed by edge id.
struct EdgeSupport {
  std::vector<Support> cycle;
  std::vector<Support> flow;

  friend bool operator==(const EdgeSupport&, const EdgeSupport&) = default;
};

struct TriangleTotals {
  std::uint64_t cycle_count = 0;
  std::uint64_t flow_count = 0;

  friend bool operator==(const TriangleTotals&, const TriangleTotals&) = default;
};

namespace detail {

template <typename Fn>
void intersect(std::span<const Incidence> a, std::span<const Incidence> b, Fn&& fn) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->node < ib->node) {
      ++ia;
    } else if (ib->node < ia->node) {
      ++ib;
    } else {
      fn(ia->edge, ib->edge);
      ++ia;
      ++ib;
    }
  }
}

}  // namespace detail

/// Calls fn(partner_a, partner_b) once for every occurrence of a triangle of
/// type `t` that contains edge `e`, passing the ids of the other two edges.
template <typename Fn>
void for_each_triangle(const DirectedGraph& g, EdgeId e, TriangleType t, Fn&& fn) {
  const Edge& ij = g.edge(e);
  const NodeId i = ij.source;
  const NodeId j = ij.target;
  if (t == TriangleType::cycle) {
    // i->j, j->k, k->i
    detail::intersect(g.out(j), g.in(i), fn);
    return;
  }
  // i->j as source->middle: i->c, j->c
  detail::intersect(g.out(i), g.out(j), fn);
  // i->j as source->sink: i->b, b->j
  detail::intersect(g.out(i), g.in(j), fn);
  // i->j as middle->sink: a->i, a->j
  detail::intersect(g.in(i), g.in(j), fn);
}

/// Number of cycle-triangle occurrences containing each edge.
std::vector<Support> cycle_support(const DirectedGraph& g, Execution exec = Execution::parallel);

/// Number of flow-triangle occurrences containing each edge, over all three roles.
std::vector<Support> flow_support(const DirectedGraph& g, Execution exec = Execution::parallel);

std::vector<Support> support(const DirectedGraph& g, TriangleType t,
                             Execution exec = Execution::parallel);

EdgeSupport edge_support(const DirectedGraph& g, Execution exec = Execution::parallel);

/// Occurrence totals; each occurrence contributes to three edge supports.
TriangleTotals triangle_totals(const EdgeSupport& s);
TriangleTotals triangle_totals(const DirectedGraph& g);

namespace reference {

/// Serial occurrence-centric census: enumerates each triangle occurrence once
/// from its lowest-indexed node and credits its three edges. Kept as a check
/// on the edge-centric kernels.
EdgeSupport enumerate_occurrences(const DirectedGraph& g, TriangleTotals* totals = nullptr);

}  // namespace reference

}  // namespace dtruss
