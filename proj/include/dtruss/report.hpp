#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtruss/digraph.hpp"
#include "dtruss/truss.hpp"

namespace dtruss {

/// Bad flag combination or value; the CLI maps it to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that parses but cannot be analysed (e.g. no edges); exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A post-condition check failed; exit code 3.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int input = 2;
inline constexpr int internal = 3;
}  // namespace exit_code

enum class TableFormat { tsv, json };

TableFormat parse_table_format(const std::string& s);

struct RunConfig {
  std::filesystem::path input;
  std::optional<std::filesystem::path> labels;
  std::filesystem::path out_dir = ".";
  TableFormat format = TableFormat::tsv;

  TrussType extract_type = TrussType::cycle;
  TrussNumber k = 0;

  /// Ensemble size; D is only computed when set.
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  double swaps_per_edge = 10.0;
  double max_attempts_per_edge = 100.0;

  /// Throws UsageError when the combination is invalid.
  void validate() const;
};

/// Loads cfg.input (and labels) and reports ingest warnings to `err`.
/// Throws InputError when nothing is left after cleaning.
LoadedGraph load_input(const RunConfig& cfg, std::ostream& err);

/// supports.tsv (source, target, cycle_support, flow_support); totals JSON on `out`.
void run_census(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// truss.tsv (source, target, k_cycle, k_flow), distributions.tsv, joint.tsv
/// and report.json. Summary JSON on `out`.
void run_truss(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct ExtractedFile {
  std::filesystem::path edges;
  std::filesystem::path dot;
  std::size_t edge_count = 0;
  std::size_t node_count = 0;
};

/// One `<type>_k<k>_comp<i>.edges` and `.dot` pair per component of the
/// requested truss, ordered by descending edge count, then smallest node name.
std::vector<ExtractedFile> run_extract(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// `random_<i>.edges` per sample (default one sample).
void run_randomize(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Orders components by descending edge count, ties by the smallest display
/// name among their nodes.
void order_components(const DirectedGraph& g, std::vector<TrussComponent>& comps);

/// Writes one component in DOT. Edge classes: cycle-only, flow-only, both, neither,
/// relative to the given cycle and flow levels.
void write_component_dot(std::ostream& out, const DirectedGraph& g, const TrussComponent& c,
                         const TrussAssignment& cycle, const TrussAssignment& flow,
                         TrussNumber cycle_level, TrussNumber flow_level);

}  // namespace dtruss
