// dtruss: cycle and flow truss analysis of directed networks.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dtruss/report.hpp"

namespace {

void add_common(CLI::App* cmd, dtruss::RunConfig& cfg, std::string& format) {
  cmd->add_option("--input", cfg.input, "Edge list (\"source target\" per line)")->required();
  cmd->add_option("--labels", cfg.labels, "Label map (\"index<TAB>label\" per line)");
  cmd->add_option("--out-dir", cfg.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--format", format, "Per-edge table format: tsv or json")->capture_default_str();
}

void add_ensemble(CLI::App* cmd, dtruss::RunConfig& cfg) {
  cmd->add_option("--samples", cfg.samples, "Number of rewired networks");
  cmd->add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
  cmd->add_option("--swaps-per-edge", cfg.swaps_per_edge, "Successful swaps per edge")
      ->capture_default_str();
  cmd->add_option("--max-attempts-per-edge", cfg.max_attempts_per_edge, "Swap attempt cap per edge")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle and flow truss decomposition for directed networks"};
  app.require_subcommand(1);

  dtruss::RunConfig cfg;
  std::string format = "tsv";
  std::string type = "cycle";

  auto* census = app.add_subcommand("census", "Per-edge cycle and flow triangle supports");
  add_common(census, cfg, format);

  auto* truss = app.add_subcommand("truss", "Truss numbers, distributions, R and (with --samples) D");
  add_common(truss, cfg, format);
  add_ensemble(truss, cfg);

  auto* extract = app.add_subcommand("extract", "Write each k-truss as an edge list and DOT file");
  add_common(extract, cfg, format);
  extract->add_option("--type", type, "cycle or flow")
      ->check(CLI::IsMember({"cycle", "flow"}))
      ->capture_default_str();
  extract->add_option("--k", cfg.k, "Truss level")->required();

  auto* randomize = app.add_subcommand("randomize", "Degree-preserving rewired edge lists");
  add_common(randomize, cfg, format);
  add_ensemble(randomize, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? dtruss::exit_code::ok : dtruss::exit_code::usage;
  }

  try {
    cfg.format = dtruss::parse_table_format(format);
    cfg.extract_type = dtruss::parse_triangle_type(type);
    if (census->parsed()) {
      dtruss::run_census(cfg, std::cout, std::cerr);
    } else if (truss->parsed()) {
      dtruss::run_truss(cfg, std::cout, std::cerr);
    } else if (extract->parsed()) {
      dtruss::run_extract(cfg, std::cout, std::cerr);
    } else if (randomize->parsed()) {
      dtruss::run_randomize(cfg, std::cout, std::cerr);
    }
  } catch (const dtruss::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dtruss::exit_code::usage;
  } catch (const dtruss::ParseError& e) {
    std::cerr << "error: " << cfg.input.string() << ": " << e.what() << '\n';
    return dtruss::exit_code::input;
  } catch (const dtruss::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dtruss::exit_code::input;
  } catch (const dtruss::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return dtruss::exit_code::input;
  } catch (const dtruss::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return dtruss::exit_code::internal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return dtruss::exit_code::internal;
  }
  return dtruss::exit_code::ok;
}
