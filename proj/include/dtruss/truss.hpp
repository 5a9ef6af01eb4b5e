#pragma once

#include <cstddef>
#include <vector>

#include "dtruss/digraph.hpp"
#include "dtruss/triangle_census.hpp"

namespace dtruss {

using TrussType = TriangleType;
using TrussNumber = std::uint32_t;

/// Per-edge truss numbers of one triangle type.
struct TrussAssignment {
  TrussType type = TrussType::cycle;
  std::vector<TrussNumber> truss_number;  // indexed by edge id
  TrussNumber k_max = 0;

  std::size_t edge_count() const noexcept { return truss_number.size(); }
  friend bool operator==(const TrussAssignment&, const TrussAssignment&) = default;
};

/// One maximal weakly connected k-truss.
struct TrussComponent {
  TrussType type = TrussType::cycle;
  TrussNumber level = 0;
  std::vector<EdgeId> edges;  // ascending
  std::vector<NodeId> nodes;  // ascending

  friend bool operator==(const TrussComponent&, const TrussComponent&) = default;
};

/// Truss numbers by support peeling.
///
/// Edges are removed in nondecreasing order of their current support, counted
/// over triangles whose three edges are all still present. A removed edge's
/// truss number is its support at removal time; partner supports are never
/// lowered below the level currently being peeled, so the levels are
/// monotone. Buckets use the position-swap layout of Batagelj and Zaversnik
/// for O(1) reprioritization.
TrussAssignment truss_numbers(const DirectedGraph& g, TrussType t);

/// Literal fixed-point definition: for k = 0, 1, ... repeatedly delete every
/// edge with fewer than k supporting triangles among the survivors,
/// recounting from scratch each round. Quadratic-ish; meant as an oracle on
/// small graphs.
TrussAssignment naive_truss_numbers(const DirectedGraph& g, TrussType t);

/// Maximal weakly connected subgraphs of {e : k_e >= k}. Components come out
/// ordered by their smallest edge id.
std::vector<TrussComponent> k_truss_components(const DirectedGraph& g, const TrussAssignment& a,
                                               TrussNumber k);
std::vector<TrussComponent> k_truss_components(const DirectedGraph& g, TrussType t, TrussNumber k);

TrussNumber max_truss_number(const DirectedGraph& g, TrussType t);

/// Number of `t` triangles containing each component edge whose other two
/// edges also lie in the component. Computed directly, without peeling.
std::vector<Support> internal_support(const DirectedGraph& g, const TrussComponent& c);

}  // namespace dtruss
