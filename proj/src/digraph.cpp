#include "dtruss/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace dtruss {

namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

bool is_comment_or_blank(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return true;
  return line[first] == '#' || line[first] == '%';
}

void build_csr(std::size_t n, std::span<const Edge> edges, bool outgoing,
               std::vector<std::size_t>& offsets, std::vector<Incidence>& adj) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) ++offsets[(outgoing ? e.source : e.target) + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  adj.resize(edges.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    const NodeId from = outgoing ? e.source : e.target;
    const NodeId to = outgoing ? e.target : e.source;
    adj[cursor[from]++] = {to, id};
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adj.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              adj.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]),
              [](const Incidence& a, const Incidence& b) { return a.node < b.node; });
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

DirectedGraph::DirectedGraph(std::size_t node_count, std::vector<Edge> edges,
                             std::vector<std::string> tokens,
                             std::vector<std::optional<std::string>> labels)
    : tokens_(std::move(tokens)), labels_(std::move(labels)), edges_(std::move(edges)) {
  if (tokens_.empty()) {
    tokens_.reserve(node_count);
    for (std::size_t v = 0; v < node_count; ++v) tokens_.push_back(std::to_string(v));
  }
  if (tokens_.size() != node_count) throw std::invalid_argument("token count does not match node count");
  if (labels_.empty()) labels_.resize(node_count);
  if (labels_.size() != node_count) throw std::invalid_argument("label count does not match node count");
  if (edges_.size() > std::numeric_limits<EdgeId>::max()) throw std::invalid_argument("too many edges");

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (e.source >= node_count || e.target >= node_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.source == e.target) throw std::invalid_argument("self-loop in simple graph");
    if (!seen.insert(pair_key(e.source, e.target)).second)
      throw std::invalid_argument("duplicate edge in simple graph");
  }
  build_csr(node_count, edges_, true, out_offsets_, out_);
  build_csr(node_count, edges_, false, in_offsets_, in_);
}

std::optional<EdgeId> DirectedGraph::find_edge(NodeId u, NodeId v) const noexcept {
  if (u >= node_count()) return std::nullopt;
  const auto nbrs = out(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                                   [](const Incidence& a, NodeId x) { return a.node < x; });
  if (it == nbrs.end() || it->node != v) return std::nullopt;
  return it->edge;
}

bool DirectedGraph::has_labels() const noexcept {
  return std::any_of(labels_.begin(), labels_.end(), [](const auto& l) { return l.has_value(); });
}

const std::string& DirectedGraph::display_name(NodeId v) const {
  return labels_[v] ? *labels_[v] : tokens_[v];
}

LoadedGraph load_edge_list(std::istream& in) {
  LoadedGraph result;
  IngestReport& report = result.report;
  std::unordered_map<std::string, NodeId> index;
  std::vector<std::string> tokens;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  auto intern = [&](const std::string& token) {
    auto [it, inserted] = index.try_emplace(token, static_cast<NodeId>(tokens.size()));
    if (inserted) tokens.push_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b)) throw ParseError(line_no, "expected \"source target\"");
    if (fields >> extra) ++report.extra_columns_ignored;
    const NodeId u = intern(a);
    const NodeId v = intern(b);
    if (u == v) {
      ++report.self_loops_dropped;
    } else if (!seen.insert(pair_key(u, v)).second) {
      ++report.duplicates_dropped;
    } else {
      edges.push_back({u, v});
    }
  }
  if (in.bad()) throw IoError("read failure on edge-list stream");

  report.nodes_read = tokens.size();
  report.edges_kept = edges.size();
  const std::size_t n = tokens.size();
  result.graph = DirectedGraph(n, std::move(edges), std::move(tokens));
  return result;
}

LoadedGraph load_edge_list(std::istream& in, const std::filesystem::path& label_map) {
  LoadedGraph loaded = load_edge_list(in);
  std::ifstream labels(label_map);
  if (!labels) throw IoError("cannot open label map " + label_map.string());
  loaded.graph = attach_labels(loaded.graph, labels);
  return loaded;
}

LoadedGraph load_edge_list_file(const std::filesystem::path& path,
                                const std::optional<std::filesystem::path>& label_map) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return label_map ? load_edge_list(in, *label_map) : load_edge_list(in);
}

DirectedGraph attach_labels(const DirectedGraph& g, std::istream& label_map) {
  std::unordered_map<std::string, NodeId> index;
  for (NodeId v = 0; v < g.node_count(); ++v) index.emplace(g.token(v), v);

  std::vector<std::optional<std::string>> labels(g.labels().begin(), g.labels().end());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(label_map, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_comment_or_blank(line)) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(line_no, "expected \"index<TAB>label\"");
    const std::string token = line.substr(0, tab);
    const std::string label = line.substr(tab + 1);
    if (token.empty() || label.empty()) throw ParseError(line_no, "empty index or label");
    if (auto it = index.find(token); it != index.end()) labels[it->second] = label;
  }
  if (label_map.bad()) throw IoError("read failure on label map");

  return DirectedGraph(g.node_count(), std::vector<Edge>(g.edges().begin(), g.edges().end()),
                       std::vector<std::string>(g.tokens().begin(), g.tokens().end()),
                       std::move(labels));
}

void write_edge_list(std::ostream& out, const DirectedGraph& g) {
  std::vector<std::pair<const std::string*, const std::string*>> rows;
  rows.reserve(g.edge_count());
  for (const Edge& e : g.edges()) rows.emplace_back(&g.token(e.source), &g.token(e.target));
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (*a.first != *b.first) return *a.first < *b.first;
    return *a.second < *b.second;
  });
  for (const auto& [s, t] : rows) out << *s << ' ' << *t << '\n';
}

DegreeSequences degree_sequences(const DirectedGraph& g) {
  DegreeSequences d;
  d.out.resize(g.node_count());
  d.in.resize(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    d.out[v] = g.out_degree(v);
    d.in[v] = g.in_degree(v);
  }
  return d;
}

std::vector<std::vector<NodeId>> NodePartition::groups() const {
  std::vector<std::vector<NodeId>> out(count);
  for (NodeId v = 0; v < component_of.size(); ++v) out[component_of[v]].push_back(v);
  return out;
}

NodePartition weakly_connected_components(const DirectedGraph& g) {
  const std::size_t n = g.node_count();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  NodePartition p{std::vector<std::size_t>(n, unset), 0};
  std::vector<NodeId> stack;
  for (NodeId root = 0; root < n; ++root) {
    if (p.component_of[root] != unset) continue;
    const std::size_t id = p.count++;
    p.component_of[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (auto nbrs : {g.out(v), g.in(v)}) {
        for (const Incidence& w : nbrs) {
          if (p.component_of[w.node] == unset) {
            p.component_of[w.node] = id;
            stack.push_back(w.node);
          }
        }
      }
    }
  }
  return p;
}

NodePartition strongly_connected_components(const DirectedGraph& g) {
  const std::size_t n = g.node_count();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeId> scc_stack;
  std::vector<std::size_t> raw(n, 0);
  std::size_t next_order = 0, raw_count = 0;

  struct Frame {
    NodeId node;
    std::size_t next_child;
  };
  std::vector<Frame> call;

  for (NodeId root = 0; root < n; ++root) {
    if (order[root] != unvisited) continue;
    call.push_back({root, 0});
    order[root] = low[root] = next_order++;
    scc_stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto nbrs = g.out(f.node);
      if (f.next_child < nbrs.size()) {
        const NodeId w = nbrs[f.next_child++].node;
        if (order[w] == unvisited) {
          order[w] = low[w] = next_order++;
          scc_stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], order[w]);
        }
        continue;
      }
      const NodeId v = f.node;
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
      if (low[v] == order[v]) {
        NodeId w;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = false;
          raw[w] = raw_count;
        } while (w != v);
        ++raw_count;
      }
    }
  }

  // Renumber so ids follow the smallest member node, matching the WCC convention.
  NodePartition p{std::vector<std::size_t>(n), 0};
  std::vector<std::size_t> remap(raw_count, unvisited);
  for (NodeId v = 0; v < n; ++v) {
    if (remap[raw[v]] == unvisited) remap[raw[v]] = p.count++;
    p.component_of[v] = remap[raw[v]];
  }
  return p;
}

DirectedGraph induced_subgraph(const DirectedGraph& g, std::span<const EdgeId> edge_subset) {
  constexpr NodeId absent = static_cast<NodeId>(-1);
  std::vector<NodeId> local(g.node_count(), absent);
  std::vector<NodeId> parent_nodes;
  std::vector<Edge> edges;
  std::vector<EdgeId> parent_edges;
  edges.reserve(edge_subset.size());
  parent_edges.reserve(edge_subset.size());
  std::unordered_set<EdgeId> taken;

  auto map_node = [&](NodeId v) {
    if (local[v] == absent) {
      local[v] = static_cast<NodeId>(parent_nodes.size());
      parent_nodes.push_back(v);
    }
    return local[v];
  };
  for (EdgeId e : edge_subset) {
    if (e >= g.edge_count()) throw std::out_of_range("edge index " + std::to_string(e) + " out of range");
    if (!taken.insert(e).second) continue;
    const Edge& pe = g.edge(e);
    const NodeId s = map_node(pe.source);
    const NodeId t = map_node(pe.target);
    edges.push_back({s, t});
    parent_edges.push_back(e);
  }

  std::vector<std::string> tokens;
  std::vector<std::optional<std::string>> labels;
  tokens.reserve(parent_nodes.size());
  labels.reserve(parent_nodes.size());
  for (NodeId v : parent_nodes) {
    tokens.push_back(g.token(v));
    labels.push_back(g.label(v));
  }
  DirectedGraph sub(parent_nodes.size(), std::move(edges), std::move(tokens), std::move(labels));
  sub.parent_edges_ = std::move(parent_edges);
  sub.parent_nodes_ = std::move(parent_nodes);
  return sub;
}

DirectedGraph reversed(const DirectedGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({e.target, e.source});
  return DirectedGraph(g.node_count(), std::move(edges),
                       std::vector<std::string>(g.tokens().begin(), g.tokens().end()),
                       std::vector<std::optional<std::string>>(g.labels().begin(), g.labels().end()));
}

}  // namespace dtruss
