#include "dtruss/report.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "dtruss/metrics.hpp"
#include "dtruss/randomization.hpp"
#include "dtruss/triangle_census.hpp"
#include "json.hpp"

namespace dtruss {

namespace {

using Json = nlohmann::ordered_json;

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  return f;
}

void prepare_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
}

// Names written into edge files must stay single tokens.
std::string as_token(const std::string& name) {
  std::string s = name;
  std::replace_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }, '_');
  return s;
}

std::string dot_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') q += '\\';
    q += c;
  }
  return q + '"';
}

Json distribution_json(const TrussDistribution& d) {
  return Json{{"k_max", d.k_max},
              {"k_med", d.k_med},
              {"counts", d.counts},
              {"f", d.frequencies()},
              {"F", d.cdf()}};
}

}  // namespace

TableFormat parse_table_format(const std::string& s) {
  if (s == "tsv") return TableFormat::tsv;
  if (s == "json") return TableFormat::json;
  throw UsageError("unknown format '" + s + "' (expected tsv or json)");
}

void RunConfig::validate() const {
  if (input.empty()) throw UsageError("--input is required");
  if (samples && *samples == 0) throw UsageError("--samples must be >= 1");
  if (!(swaps_per_edge > 0.0)) throw UsageError("--swaps-per-edge must be positive");
  if (max_attempts_per_edge < swaps_per_edge)
    throw UsageError("--max-attempts-per-edge must be >= --swaps-per-edge");
}

LoadedGraph load_input(const RunConfig& cfg, std::ostream& err) {
  LoadedGraph loaded = load_edge_list_file(cfg.input, cfg.labels);
  const IngestReport& r = loaded.report;
  if (r.extra_columns_ignored > 0)
    err << "warning: ignored extra columns on " << r.extra_columns_ignored
        << " line(s); edges are treated as unweighted\n";
  if (r.self_loops_dropped > 0) err << "note: dropped " << r.self_loops_dropped << " self-loop(s)\n";
  if (r.duplicates_dropped > 0) err << "note: dropped " << r.duplicates_dropped << " duplicate edge(s)\n";
  if (loaded.graph.empty()) throw InputError("no edges");
  return loaded;
}

void run_census(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const LoadedGraph loaded = load_input(cfg, err);
  const DirectedGraph& g = loaded.graph;
  const EdgeSupport s = edge_support(g);
  const TriangleTotals totals = triangle_totals(s);

  prepare_out_dir(cfg.out_dir);
  if (cfg.format == TableFormat::tsv) {
    auto f = open_output(cfg.out_dir / "supports.tsv");
    f << "source\ttarget\tcycle_support\tflow_support\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      f << g.token(g.edge(e).source) << '\t' << g.token(g.edge(e).target) << '\t' << s.cycle[e]
        << '\t' << s.flow[e] << '\n';
    }
  } else {
    Json rows = Json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      rows.push_back({{"source", g.token(g.edge(e).source)},
                      {"target", g.token(g.edge(e).target)},
                      {"cycle_support", s.cycle[e]},
                      {"flow_support", s.flow[e]}});
    }
    open_output(cfg.out_dir / "supports.json") << rows.dump(2) << '\n';
  }

  out << Json{{"nodes", g.node_count()},
              {"edges", g.edge_count()},
              {"cycle_triangles", totals.cycle_count},
              {"flow_triangles", totals.flow_count}}
             .dump()
      << '\n';
}

void run_truss(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const LoadedGraph loaded = load_input(cfg, err);
  const DirectedGraph& g = loaded.graph;

  const TrussAssignment cycle = truss_numbers(g, TrussType::cycle);
  const TrussAssignment flow = truss_numbers(g, TrussType::flow);
  const TrussDistribution dc = truss_distribution(cycle);
  const TrussDistribution df = truss_distribution(flow);
  const RMeasure r = r_measure(cycle, flow);
  const JointDistribution joint = joint_distribution(cycle, flow);
  if (joint.cycle_marginal() != dc.counts || joint.flow_marginal() != df.counts)
    throw InvariantViolation("joint distribution marginals disagree with per-type distributions");

  std::optional<EnsembleCdfs> ensemble;
  RewireConfig rewire_cfg;
  rewire_cfg.seed = cfg.seed;
  rewire_cfg.swaps_per_edge = cfg.swaps_per_edge;
  rewire_cfg.max_attempts_per_edge = cfg.max_attempts_per_edge;
  if (cfg.samples) ensemble = ensemble_truss_cdfs(g, *cfg.samples, rewire_cfg);

  prepare_out_dir(cfg.out_dir);

  if (cfg.format == TableFormat::tsv) {
    auto f = open_output(cfg.out_dir / "truss.tsv");
    f << "source\ttarget\tk_cycle\tk_flow\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      f << g.token(g.edge(e).source) << '\t' << g.token(g.edge(e).target) << '\t'
        << cycle.truss_number[e] << '\t' << flow.truss_number[e] << '\n';
    }
  } else {
    Json rows = Json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      rows.push_back({{"source", g.token(g.edge(e).source)},
                      {"target", g.token(g.edge(e).target)},
                      {"k_cycle", cycle.truss_number[e]},
                      {"k_flow", flow.truss_number[e]}});
    }
    open_output(cfg.out_dir / "truss.json") << rows.dump(2) << '\n';
  }

  {
    auto f = open_output(cfg.out_dir / "distributions.tsv");
    f << std::setprecision(17);
    f << "k\tf_cycle\tF_cycle\tf_flow\tF_flow";
    if (ensemble) f << "\tF_rand_cycle\tF_rand_flow";
    f << '\n';
    const std::size_t width = std::max(dc.counts.size(), df.counts.size());
    for (std::size_t k = 0; k < width; ++k) {
      f << k << '\t' << dc.f(k) << '\t' << dc.F(k) << '\t' << df.f(k) << '\t' << df.F(k);
      if (ensemble) f << '\t' << ensemble->cycle.at(k) << '\t' << ensemble->flow.at(k);
      f << '\n';
    }
  }
  {
    auto f = open_output(cfg.out_dir / "joint.tsv");
    f << std::setprecision(17);
    f << "k_cycle\\k_flow";
    for (std::size_t b = 0; b < joint.cols; ++b) f << '\t' << b;
    f << '\n';
    for (std::size_t a = 0; a < joint.rows; ++a) {
      f << a;
      for (std::size_t b = 0; b < joint.cols; ++b) f << '\t' << joint.frequency(a, b);
      f << '\n';
    }
  }

  Json report;
  report["input"] = {{"nodes", g.node_count()},
                     {"edges", g.edge_count()},
                     {"self_loops_dropped", loaded.report.self_loops_dropped},
                     {"duplicates_dropped", loaded.report.duplicates_dropped}};
  const TriangleTotals totals = triangle_totals(g);
  report["triangles"] = {{"cycle", totals.cycle_count}, {"flow", totals.flow_count}};
  report["reciprocity"] = reciprocity(g);
  report["k_max"] = {{"cycle", cycle.k_max}, {"flow", flow.k_max}};
  report["median_rule"] = "k_med = min{k : F(k) >= 0.5}";
  report["distributions"] = {{"cycle", distribution_json(dc)}, {"flow", distribution_json(df)}};
  Json rj = {{"value", nullptr},
             {"numerator", r.both},
             {"denominator", r.either},
             {"k_med_cycle", r.k_med_cycle},
             {"k_med_flow", r.k_med_flow}};
  if (r.value) {
    rj["value"] = *r.value;
  } else {
    rj["reason"] = "no edge exceeds the cycle or flow median truss number";
  }
  report["R"] = rj;

  Json counts = Json::array();
  Json freqs = Json::array();
  for (std::size_t a = 0; a < joint.rows; ++a) {
    Json crow = Json::array();
    Json frow = Json::array();
    for (std::size_t b = 0; b < joint.cols; ++b) {
      crow.push_back(joint.count(a, b));
      frow.push_back(joint.frequency(a, b));
    }
    counts.push_back(crow);
    freqs.push_back(frow);
  }
  report["joint"] = {{"rows", "k_cycle"}, {"cols", "k_flow"}, {"counts", counts}, {"frequency", freqs}};

  if (ensemble) {
    const RewireConfig budget = rewire_cfg.resolved(g.edge_count());
    const DMeasure d_c = d_measure(dc, ensemble->cycle);
    const DMeasure d_f = d_measure(df, ensemble->flow);
    auto d_json = [](const DMeasure& d) {
      return Json{{"value", d.value}, {"K", d.cutoff}, {"degenerate_K0", d.degenerate}};
    };
    auto ens_json = [](const EnsembleCdf& e) {
      return Json{{"mean_cdf", e.mean_cdf}, {"per_sample_kmax", e.per_sample_kmax}};
    };
    report["D"] = {{"cycle", d_json(d_c)}, {"flow", d_json(d_f)}};
    report["ensemble"] = {{"samples", *cfg.samples},
                          {"seed", cfg.seed},
                          {"swaps_per_edge", cfg.swaps_per_edge},
                          {"max_attempts_per_edge", cfg.max_attempts_per_edge},
                          {"target_successful_swaps", budget.target_successful_swaps},
                          {"max_attempts", budget.max_attempts},
                          {"aggregation", "pointwise mean of per-sample CDFs"},
                          {"cycle", ens_json(ensemble->cycle)},
                          {"flow", ens_json(ensemble->flow)}};
  }
  open_output(cfg.out_dir / "report.json") << report.dump(2) << '\n';

  Json summary = {{"edges", g.edge_count()},
                  {"k_max_cycle", cycle.k_max},
                  {"k_max_flow", flow.k_max},
                  {"R", report["R"]["value"]}};
  if (ensemble) {
    summary["D_cycle"] = report["D"]["cycle"]["value"];
    summary["D_flow"] = report["D"]["flow"]["value"];
  }
  out << summary.dump() << '\n';
}

void order_components(const DirectedGraph& g, std::vector<TrussComponent>& comps) {
  auto smallest_name = [&g](const TrussComponent& c) -> const std::string& {
    const std::string* best = &g.display_name(c.nodes.front());
    for (NodeId v : c.nodes)
      if (g.display_name(v) < *best) best = &g.display_name(v);
    return *best;
  };
  std::stable_sort(comps.begin(), comps.end(), [&](const TrussComponent& a, const TrussComponent& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() > b.edges.size();
    return smallest_name(a) < smallest_name(b);
  });
}

void write_component_dot(std::ostream& out, const DirectedGraph& g, const TrussComponent& c,
                         const TrussAssignment& cycle, const TrussAssignment& flow,
                         TrussNumber cycle_level, TrussNumber flow_level) {
  out << "digraph " << dot_quote(std::string(to_string(c.type)) + "_k" + std::to_string(c.level))
      << " {\n";
  for (NodeId v : c.nodes) out << "  " << dot_quote(g.display_name(v)) << ";\n";
  for (EdgeId e : c.edges) {
    const bool in_cycle = cycle.truss_number[e] >= cycle_level && cycle_level > 0;
    const bool in_flow = flow.truss_number[e] >= flow_level && flow_level > 0;
    const char* cls = in_cycle && in_flow ? "both" : in_cycle ? "cycle-only" : in_flow ? "flow-only" : "neither";
    const char* color = in_cycle && in_flow ? "purple" : in_cycle ? "blue" : in_flow ? "red" : "gray";
    out << "  " << dot_quote(g.display_name(g.edge(e).source)) << " -> "
        << dot_quote(g.display_name(g.edge(e).target)) << " [class=\"" << cls << "\", color=\"" << color
        << "\"];\n";
  }
  out << "}\n";
}

std::vector<ExtractedFile> run_extract(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const LoadedGraph loaded = load_input(cfg, err);
  const DirectedGraph& g = loaded.graph;

  const TrussAssignment cycle = truss_numbers(g, TrussType::cycle);
  const TrussAssignment flow = truss_numbers(g, TrussType::flow);
  const TrussAssignment& chosen = cfg.extract_type == TrussType::cycle ? cycle : flow;
  std::vector<TrussComponent> comps = k_truss_components(g, chosen, cfg.k);
  order_components(g, comps);
  if (comps.empty()) {
    err << "warning: no " << to_string(cfg.extract_type) << " " << cfg.k << "-truss (k_max = "
        << chosen.k_max << ")\n";
  }

  // The other type is highlighted at its own maximum level.
  const TrussNumber cycle_level = cfg.extract_type == TrussType::cycle ? cfg.k : cycle.k_max;
  const TrussNumber flow_level = cfg.extract_type == TrussType::flow ? cfg.k : flow.k_max;

  prepare_out_dir(cfg.out_dir);
  std::vector<ExtractedFile> files;
  Json listing = Json::array();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const TrussComponent& c = comps[i];
    for (EdgeId e : c.edges)
      if (chosen.truss_number[e] < cfg.k) throw InvariantViolation("component edge below requested level");
    const std::string stem =
        std::string(to_string(c.type)) + "_k" + std::to_string(c.level) + "_comp" + std::to_string(i);
    ExtractedFile file{cfg.out_dir / (stem + ".edges"), cfg.out_dir / (stem + ".dot"), c.edges.size(),
                       c.nodes.size()};
    {
      std::vector<std::pair<std::string, std::string>> rows;
      for (EdgeId e : c.edges)
        rows.emplace_back(as_token(g.display_name(g.edge(e).source)),
                          as_token(g.display_name(g.edge(e).target)));
      std::sort(rows.begin(), rows.end());
      auto f = open_output(file.edges);
      for (const auto& [s, t] : rows) f << s << ' ' << t << '\n';
    }
    {
      auto f = open_output(file.dot);
      write_component_dot(f, g, c, cycle, flow, cycle_level, flow_level);
    }
    listing.push_back({{"file", file.edges.filename().string()},
                       {"edges", file.edge_count},
                       {"nodes", file.node_count}});
    files.push_back(std::move(file));
  }
  out << Json{{"type", to_string(cfg.extract_type)}, {"k", cfg.k}, {"components", listing}}.dump() << '\n';
  return files;
}

void run_randomize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  cfg.validate();
  const LoadedGraph loaded = load_input(cfg, err);
  const DirectedGraph& g = loaded.graph;
  const std::size_t samples = cfg.samples.value_or(1);

  RewireConfig base;
  base.seed = cfg.seed;
  base.swaps_per_edge = cfg.swaps_per_edge;
  base.max_attempts_per_edge = cfg.max_attempts_per_edge;
  const DegreeSequences degrees = degree_sequences(g);

  prepare_out_dir(cfg.out_dir);
  Json listing = Json::array();
  for (std::size_t i = 0; i < samples; ++i) {
    RewireConfig c = base;
    c.seed = sample_seed(cfg.seed, i);
    RewireStats stats;
    const DirectedGraph r = rewire(g, c, &stats);
    if (degree_sequences(r) != degrees) throw InvariantViolation("rewiring changed a degree sequence");
    const std::string name = "random_" + std::to_string(i) + ".edges";
    auto f = open_output(cfg.out_dir / name);
    write_edge_list(f, r);
    listing.push_back({{"file", name}, {"attempts", stats.attempts}, {"successes", stats.successes}});
  }
  out << Json{{"seed", cfg.seed}, {"samples", listing}}.dump() << '\n';
}

}  // namespace dtruss
