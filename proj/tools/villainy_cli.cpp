// villainy: exact villainy / weak villainy computation and verification sweeps.
//
//   villainy inspect "cycle(5)"
//   villainy sweep-theorem5 --max-n 7 --workers 8
//   villainy cycles --max-k 4
//
// Exit codes: 0 clean, 2 counterexample, 64 usage/parse error, 65 resource bound.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "villainy/harness.hpp"

namespace {

using villainy::HarnessConfig;

int emit(const villainy::SweepReport& report, const HarnessConfig& config, const std::string& out_path) {
  std::string text = villainy::render(report, config.format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "villainy: cannot write " << out_path << "\n";
      return villainy::kExitUsage;
    }
    out << text;
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  HarnessConfig config;
  try {
    config = villainy::config_from_environment();
  } catch (const std::exception& e) {
    std::cerr << "villainy: " << e.what() << "\n";
    return villainy::kExitUsage;
  }

  CLI::App app{"Exact villainy and weak villainy of graph colorings"};
  app.require_subcommand(1);

  std::string mode = "both", format = "json", domain = "permutations", out_path, input_file;
  std::string adjudication = config.adjudication_path;
  bool write_adjudication = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-n", config.max_n, "Largest order swept (default 7, or VILLAINY_MAX_N)");
    sub->add_option("--exact-bound", config.exact_bound, "Largest order the exact search accepts");
    sub->add_option("--mode", mode, "Quantities to compute")->check(CLI::IsMember({"strong", "weak", "both"}));
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--time-budget", config.time_budget_seconds, "Seconds before the sweep stops taking new graphs");
    sub->add_option("--workers", config.workers, "Worker threads (0 = all cores)");
    sub->add_option("--input", input_file, "graph6 file to sweep instead of enumerating");
    sub->add_option("--out", out_path, "Write the report here instead of stdout");
    sub->add_option("--domain", domain, "Colorings the graph maximum ranges over")
        ->check(CLI::IsMember({"permutations", "proper"}));
    sub->add_flag("--timing", config.timing, "Include wall-clock duration in the report");
  };

  std::string inspect_input;
  auto* inspect = app.add_subcommand("inspect", "Certificates, label and known values for one graph");
  inspect->add_option("graph", inspect_input, "graph6 text or family expression, e.g. disjoint_union(complete(3), complete(2))")
      ->required();
  add_common(inspect);

  auto* theorem5 = app.add_subcommand("sweep-theorem5", "Check that every graph with B=2 is classified");
  add_common(theorem5);

  auto* bipartite = app.add_subcommand("sweep-bipartite", "Compare connected bipartite graphs with the closed forms");
  add_common(bipartite);
  bipartite->add_option("--adjudication", adjudication, "Frozen values for the 6-vertex 3|3 family");
  bipartite->add_flag("--write-adjudication", write_adjudication,
                      "Print freshly computed 3|3 family values in the adjudication format and exit");

  auto* lemmas = app.add_subcommand("sweep-lemmas", "Check every fired lemma bound against brute force");
  add_common(lemmas);

  int max_k = 4;
  auto* cycles = app.add_subcommand("cycles", "B and B_w of odd cycles C_{2k+1}, k = 2..max-k");
  add_common(cycles);
  cycles->add_option("--max-k", max_k, "Largest k");

  auto* parity = app.add_subcommand("parity", "Histogram of villainy values by parity");
  add_common(parity);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return villainy::kExitUsage;
  }

  config.mode = mode == "strong" ? villainy::ModeSelection::kStrong
                : mode == "weak" ? villainy::ModeSelection::kWeak
                                 : villainy::ModeSelection::kBoth;
  config.format = format == "csv" ? villainy::ReportFormat::kCsv : villainy::ReportFormat::kJson;
  config.domain = domain == "proper" ? villainy::OuterDomain::kProperOnly : villainy::OuterDomain::kPermutations;
  if (!input_file.empty()) config.input_path = input_file;
  config.adjudication_path = adjudication;

  try {
    villainy::validate(config);
    if (*inspect) return emit(villainy::cmd_inspect(inspect_input, config), config, out_path);
    if (*theorem5) return emit(villainy::cmd_sweep_theorem5(config), config, out_path);
    if (*bipartite) {
      if (write_adjudication) {
        std::cout << villainy::compute_adjudication(config).dump(2) << "\n";
        return villainy::kExitClean;
      }
      return emit(villainy::cmd_sweep_bipartite(config), config, out_path);
    }
    if (*lemmas) return emit(villainy::cmd_sweep_lemmas(config), config, out_path);
    if (*cycles) return emit(villainy::cmd_cycles(max_k, config), config, out_path);
    if (*parity) return emit(villainy::cmd_parity(config), config, out_path);
  } catch (const villainy::HarnessError& e) {
    std::cerr << "villainy: " << e.what() << "\n";
    return e.exit_code();
  } catch (const villainy::OrderTooLarge& e) {
    std::cerr << "villainy: " << e.what() << "\n";
    return villainy::kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "villainy: " << e.what() << "\n";
    return villainy::kExitUsage;
  }
  return villainy::kExitUsage;
}
