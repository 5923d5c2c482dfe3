#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "villainy/characterize.hpp"
#include "villainy/graph.hpp"
#include "villainy/villainy.hpp"

namespace villainy {

enum class ModeSelection { kStrong, kWeak, kBoth };
enum class ReportFormat { kJson, kCsv };

inline constexpr int kExitClean = 0;
inline constexpr int kExitCounterexample = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitResource = 65;

struct HarnessConfig {
  int max_n = 7;
  int exact_bound = 8;
  double time_budget_seconds = 3600.0;
  ReportFormat format = ReportFormat::kJson;
  int workers = 0;  // 0: OpenMP default
  std::optional<std::string> input_path;
  ModeSelection mode = ModeSelection::kBoth;
  std::string adjudication_path;
  OuterDomain domain = OuterDomain::kPermutations;
  bool timing = false;

  bool wants_strong() const { return mode != ModeSelection::kWeak; }
  bool wants_weak() const { return mode != ModeSelection::kStrong; }
};

/// Throws std::invalid_argument if a bound is outside the engine limits.
void validate(const HarnessConfig& config);

/// Applies VILLAINY_MAX_N (when set) to the default sweep bound.
HarnessConfig config_from_environment();

/// Rows are sorted by (n, graph6). `document` is the full JSON report;
/// `exit_code` follows the harness convention (0, 2, 64, 65).
struct SweepReport {
  nlohmann::json document;
  int exit_code = kExitClean;

  const nlohmann::json& rows() const { return document.at("rows"); }
  const nlohmann::json& summary() const { return document.at("summary"); }
};

std::string render(const SweepReport& report, ReportFormat format);
std::string render_json(const SweepReport& report);
/// Header plus one line per row; nested values are written as compact JSON.
std::string render_csv(const SweepReport& report);

class HarnessError : public std::runtime_error {
 public:
  HarnessError(int exit_code, const std::string& what) : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

/// Input is either a graph6 line or a family expression such as "cycle(5)".
/// Throws HarnessError(64) on parse failure and HarnessError(65) when the
/// order exceeds the exact-search bound.
SweepReport cmd_inspect(const std::string& input, const HarnessConfig& config);
SweepReport cmd_sweep_theorem5(const HarnessConfig& config);
SweepReport cmd_sweep_bipartite(const HarnessConfig& config);
SweepReport cmd_sweep_lemmas(const HarnessConfig& config);
SweepReport cmd_cycles(int max_k, const HarnessConfig& config);
SweepReport cmd_parity(const HarnessConfig& config);

/// Frozen B/B_w values for connected 6-vertex bipartite graphs with parts of
/// size 3, keyed by canonical graph6.
struct AdjudicationEntry {
  std::string canonical_graph6;
  int strong = 0;
  int weak = 0;
};

std::vector<AdjudicationEntry> load_adjudication(const std::string& path);
/// Computes the contested family from scratch, in the file format.
nlohmann::json compute_adjudication(const HarnessConfig& config);
bool is_contested_bipartite(const Graph& g);

nlohmann::json to_json(const VillainyCertificate& cert);
nlohmann::json to_json(const Coloring& c);

}  // namespace villainy
