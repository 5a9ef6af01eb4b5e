#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dtruss {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  NodeId source;
  NodeId target;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown for malformed edge-list or label-map input. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Thrown when an input file cannot be opened or read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adjacency entry: the neighbor together with the index of the connecting edge.
struct Incidence {
  NodeId node;
  EdgeId edge;
};

/// Simple directed graph in compressed sparse row form.
///
/// Nodes are dense indices [0, node_count). Every node carries an external
/// token (the string it was read as) and an optional human-readable label.
/// Edges keep the order in which they were supplied; out- and in-adjacency
/// lists are sorted by neighbor index. Immutable once built.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  /// Builds a graph from an edge list. Throws std::invalid_argument on a
  /// self-loop, a duplicate ordered pair, or an endpoint >= node_count.
  /// `tokens` may be empty, in which case decimal indices are used.
  DirectedGraph(std::size_t node_count, std::vector<Edge> edges,
                std::vector<std::string> tokens = {},
                std::vector<std::optional<std::string>> labels = {});

  std::size_t node_count() const noexcept { return tokens_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const Incidence> out(NodeId v) const noexcept {
    return {out_.data() + out_offsets_[v], out_.data() + out_offsets_[v + 1]};
  }
  std::span<const Incidence> in(NodeId v) const noexcept {
    return {in_.data() + in_offsets_[v], in_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(NodeId v) const noexcept { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(NodeId v) const noexcept { return in_offsets_[v + 1] - in_offsets_[v]; }

  /// Index of edge (u -> v), if present. O(log out_degree(u)).
  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const noexcept;
  bool has_edge(NodeId u, NodeId v) const noexcept { return find_edge(u, v).has_value(); }

  const std::string& token(NodeId v) const { return tokens_[v]; }
  std::span<const std::string> tokens() const noexcept { return tokens_; }
  const std::optional<std::string>& label(NodeId v) const { return labels_[v]; }
  std::span<const std::optional<std::string>> labels() const noexcept { return labels_; }
  bool has_labels() const noexcept;
  /// Label when one is attached, otherwise the token.
  const std::string& display_name(NodeId v) const;

  /// Indices into the parent graph when this graph was produced by
  /// induced_subgraph; empty otherwise.
  std::span<const EdgeId> parent_edges() const noexcept { return parent_edges_; }
  std::span<const NodeId> parent_nodes() const noexcept { return parent_nodes_; }

  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.tokens_ == b.tokens_ && a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  friend DirectedGraph induced_subgraph(const DirectedGraph&, std::span<const EdgeId>);

  std::vector<std::string> tokens_;
  std::vector<std::optional<std::string>> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Incidence> out_;
  std::vector<Incidence> in_;
  std::vector<EdgeId> parent_edges_;
  std::vector<NodeId> parent_nodes_;
};

struct IngestReport {
  std::size_t nodes_read = 0;
  std::size_t edges_kept = 0;
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
  /// Edge lines that carried a third (weight) column; the column is ignored.
  std::size_t extra_columns_ignored = 0;

  std::size_t edge_lines() const noexcept {
    return edges_kept + self_loops_dropped + duplicates_dropped;
  }
};

struct LoadedGraph {
  DirectedGraph graph;
  IngestReport report;
};

/// Reads "source target" lines. '#' and '%' start comment lines. Tokens are
/// mapped to dense indices in first-seen order; self-loops and repeated
/// ordered pairs are dropped and counted.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list(std::istream& in, const std::filesystem::path& label_map);
LoadedGraph load_edge_list_file(const std::filesystem::path& path,
                                const std::optional<std::filesystem::path>& label_map = {});

/// Attaches labels from "token<TAB>label" lines. Tokens absent from the graph
/// are ignored.
DirectedGraph attach_labels(const DirectedGraph& g, std::istream& label_map);

/// Writes the graph as "source target" token lines sorted by (source token,
/// target token). Loading the output and writing it again is a fixed point.
void write_edge_list(std::ostream& out, const DirectedGraph& g);

struct DegreeSequences {
  std::vector<std::size_t> out;
  std::vector<std::size_t> in;

  friend bool operator==(const DegreeSequences&, const DegreeSequences&) = default;
};

DegreeSequences degree_sequences(const DirectedGraph& g);

/// Node partition; `component_of[v]` is a dense component id assigned in order
/// of smallest member node.
struct NodePartition {
  std::vector<std::size_t> component_of;
  std::size_t count = 0;

  std::vector<std::vector<NodeId>> groups() const;
};

/// Components of the underlying undirected graph. Edge e belongs to
/// component_of[edge(e).source].
NodePartition weakly_connected_components(const DirectedGraph& g);

/// Tarjan SCC (iterative).
NodePartition strongly_connected_components(const DirectedGraph& g);

/// Subgraph made of exactly `edge_subset` and their endpoints. Node tokens,
/// labels, and the parent edge/node indices are kept. Throws
/// std::out_of_range on an edge index >= g.edge_count().
DirectedGraph induced_subgraph(const DirectedGraph& g, std::span<const EdgeId> edge_subset);

/// Same graph with every edge reversed (edge indices preserved).
DirectedGraph reversed(const DirectedGraph& g);

}  // namespace dtruss
