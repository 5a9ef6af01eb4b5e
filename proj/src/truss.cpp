#include "dtruss/truss.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace dtruss {

TrussAssignment truss_numbers(const DirectedGraph& g, TrussType t) {
  const std::size_t m = g.edge_count();
  TrussAssignment result{t, std::vector<TrussNumber>(m, 0), 0};
  if (m == 0) return result;

  std::vector<Support> sup = support(g, t, Execution::parallel);
  const Support max_sup = *std::max_element(sup.begin(), sup.end());

  // Counting sort into buckets; stable, so ties start in edge-id order.
  std::vector<std::size_t> bin_start(static_cast<std::size_t>(max_sup) + 2, 0);
  for (Support s : sup) ++bin_start[s + 1];
  std::partial_sum(bin_start.begin(), bin_start.end(), bin_start.begin());
  std::vector<EdgeId> order(m);
  std::vector<std::size_t> pos(m);
  {
    std::vector<std::size_t> cursor(bin_start.begin(), bin_start.end() - 1);
    for (EdgeId e = 0; e < m; ++e) {
      pos[e] = cursor[sup[e]]++;
      order[pos[e]] = e;
    }
  }

  std::vector<char> alive(m, 1);
  auto lower = [&](EdgeId f, Support level) {
    const Support s = sup[f];
    if (s <= level) return;
    // Swap f with the first edge of its bucket, then shrink the bucket from the front.
    const std::size_t first = bin_start[s];
    const EdgeId head = order[first];
    if (head != f) {
      std::swap(order[first], order[pos[f]]);
      pos[head] = pos[f];
      pos[f] = first;
    }
    ++bin_start[s];
    --sup[f];
  };

  for (std::size_t i = 0; i < m; ++i) {
    const EdgeId e = order[i];
    const Support level = sup[e];
    result.truss_number[e] = level;
    for_each_triangle(g, e, t, [&](EdgeId a, EdgeId b) {
      if (alive[a] && alive[b]) {
        lower(a, level);
        lower(b, level);
      }
    });
    alive[e] = 0;
  }
  result.k_max = *std::max_element(result.truss_number.begin(), result.truss_number.end());
  return result;
}

namespace {

// Support of (i -> j) among `present` edges, by scanning every third node.
Support brute_support(const std::unordered_set<std::uint64_t>& present, std::size_t n, NodeId i,
                      NodeId j, TrussType t) {
  auto has = [&present](NodeId u, NodeId v) {
    return present.count((static_cast<std::uint64_t>(u) << 32) | v) != 0;
  };
  Support c = 0;
  for (NodeId w = 0; w < n; ++w) {
    if (w == i || w == j) continue;
    if (t == TrussType::cycle) {
      c += has(j, w) && has(w, i);
    } else {
      c += has(i, w) && has(j, w);
      c += has(i, w) && has(w, j);
      c += has(w, i) && has(w, j);
    }
  }
  return c;
}

}  // namespace

TrussAssignment naive_truss_numbers(const DirectedGraph& g, TrussType t) {
  const std::size_t m = g.edge_count();
  TrussAssignment result{t, std::vector<TrussNumber>(m, 0), 0};
  std::vector<EdgeId> survivors(m);
  std::iota(survivors.begin(), survivors.end(), EdgeId{0});

  for (TrussNumber k = 1; !survivors.empty(); ++k) {
    bool changed = true;
    while (changed && !survivors.empty()) {
      std::unordered_set<std::uint64_t> present;
      for (EdgeId e : survivors)
        present.insert((static_cast<std::uint64_t>(g.edge(e).source) << 32) | g.edge(e).target);
      std::vector<EdgeId> keep;
      for (EdgeId e : survivors) {
        if (brute_support(present, g.node_count(), g.edge(e).source, g.edge(e).target, t) >= k)
          keep.push_back(e);
      }
      changed = keep.size() != survivors.size();
      survivors = std::move(keep);
    }
    for (EdgeId e : survivors) result.truss_number[e] = k;
    if (!survivors.empty()) result.k_max = k;
  }
  return result;
}

std::vector<TrussComponent> k_truss_components(const DirectedGraph& g, const TrussAssignment& a,
                                               TrussNumber k) {
  const std::size_t n = g.node_count();
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), NodeId{0});
  auto find = [&parent](NodeId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  std::vector<EdgeId> members;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (a.truss_number[e] < k) continue;
    members.push_back(e);
    const NodeId ru = find(g.edge(e).source);
    const NodeId rv = find(g.edge(e).target);
    if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
  }

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> slot(n, none);
  std::vector<TrussComponent> comps;
  for (EdgeId e : members) {
    const NodeId root = find(g.edge(e).source);
    if (slot[root] == none) {
      slot[root] = comps.size();
      comps.push_back({a.type, k, {}, {}});
    }
    comps[slot[root]].edges.push_back(e);
  }
  for (TrussComponent& c : comps) {
    for (EdgeId e : c.edges) {
      c.nodes.push_back(g.edge(e).source);
      c.nodes.push_back(g.edge(e).target);
    }
    std::sort(c.nodes.begin(), c.nodes.end());
    c.nodes.erase(std::unique(c.nodes.begin(), c.nodes.end()), c.nodes.end());
  }
  return comps;
}

std::vector<TrussComponent> k_truss_components(const DirectedGraph& g, TrussType t, TrussNumber k) {
  return k_truss_components(g, truss_numbers(g, t), k);
}

TrussNumber max_truss_number(const DirectedGraph& g, TrussType t) {
  return truss_numbers(g, t).k_max;
}

std::vector<Support> internal_support(const DirectedGraph& g, const TrussComponent& c) {
  std::vector<char> inside(g.edge_count(), 0);
  for (EdgeId e : c.edges) inside[e] = 1;
  std::vector<Support> out;
  out.reserve(c.edges.size());
  for (EdgeId e : c.edges) {
    Support s = 0;
    for_each_triangle(g, e, c.type, [&](EdgeId a, EdgeId b) { s += inside[a] && inside[b]; });
    out.push_back(s);
  }
  return out;
}

}  // namespace dtruss
