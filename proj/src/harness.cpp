#include "villainy/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "villainy/coloring.hpp"

namespace villainy {

using nlohmann::json;

namespace {

constexpr int kMaxCycleK = 6;

const char* mode_name(ModeSelection m) {
  switch (m) {
    case ModeSelection::kStrong: return "strong";
    case ModeSelection::kWeak: return "weak";
    case ModeSelection::kBoth: return "both";
  }
  return "both";
}

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

json label_json(ClassLabel label) {
  return label == ClassLabel::kNone ? json(nullptr) : json(to_string(label));
}

json known_json(const std::optional<KnownValue>& k) {
  if (!k) return nullptr;
  return json{{"value", k->value}, {"source", k->source}};
}

json parameters(const HarnessConfig& config) {
  return json{{"max_n", config.max_n},
              {"exact_bound", config.exact_bound},
              {"mode", mode_name(config.mode)},
              {"time_budget_seconds", config.time_budget_seconds},
              {"domain", config.domain == OuterDomain::kPermutations ? "permutations" : "proper"},
              {"input", config.input_path ? json(*config.input_path) : json(nullptr)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw HarnessError(kExitUsage, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

VillainyOptions engine_options(const HarnessConfig& config, int bound) {
  VillainyOptions o;
  o.exact_bound = bound;
  o.domain = config.domain;
  o.parallel = false;  // sweeps parallelize across graphs instead
  return o;
}

struct GraphItem {
  Graph graph;
  std::string graph6;
};

// Graphs for a sweep, sorted by (n, graph6).
std::vector<GraphItem> sweep_graphs(const HarnessConfig& config) {
  std::vector<Graph> graphs;
  if (config.input_path) {
    try {
      graphs = read_graph6_lines(read_file(*config.input_path));
    } catch (const Graph6ParseError& e) {
      throw HarnessError(kExitUsage, e.what());
    }
    for (const Graph& g : graphs) {
      if (g.order() > config.exact_bound) {
        throw HarnessError(kExitResource, "input graph of order " + std::to_string(g.order()) +
                                              " exceeds the exact-search bound " + std::to_string(config.exact_bound));
      }
    }
  } else {
    if (config.max_n > kMaxEnumerationOrder) {
      throw HarnessError(kExitResource, "enumeration is limited to n <= " + std::to_string(kMaxEnumerationOrder) +
                                            "; pass larger graphs with --input");
    }
    if (config.max_n > config.exact_bound) {
      throw HarnessError(kExitResource, "--max-n exceeds the exact-search bound");
    }
    for (int n = 1; n <= config.max_n; ++n) {
      auto level = enumerate_nonisomorphic(n);
      graphs.insert(graphs.end(), level.begin(), level.end());
    }
  }
  std::vector<GraphItem> items;
  items.reserve(graphs.size());
  for (auto& g : graphs) {
    std::string g6 = emit_graph6(g);
    items.push_back({std::move(g), std::move(g6)});
  }
  std::stable_sort(items.begin(), items.end(), [](const GraphItem& a, const GraphItem& b) {
    if (a.graph.order() != b.graph.order()) return a.graph.order() < b.graph.order();
    return a.graph6 < b.graph6;
  });
  return items;
}

struct Evaluation {
  std::vector<std::optional<json>> rows;
  std::size_t evaluated = 0;
};

// Runs `per_graph` over the items on a worker pool. The deadline is checked
// before each graph starts; graphs not started in time are left empty.
template <typename F>
Evaluation evaluate(const std::vector<GraphItem>& items, const HarnessConfig& config, F&& per_graph) {
  Evaluation out;
  out.rows.resize(items.size());
  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(config.time_budget_seconds));
  int workers = config.workers;
#ifdef _OPENMP
  if (workers <= 0) workers = omp_get_max_threads();
#else
  workers = 1;
#endif
  const long count = static_cast<long>(items.size());
  // the first failure is rethrown after the loop; exceptions must not leave an OpenMP region
  std::vector<std::string> failures(items.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (long i = 0; i < count; ++i) {
    if (std::chrono::steady_clock::now() > deadline) continue;
    try {
      out.rows[static_cast<std::size_t>(i)] = per_graph(items[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
      failures[static_cast<std::size_t>(i)] = e.what();
    }
  }
  for (const auto& f : failures) {
    if (!f.empty()) throw std::runtime_error(f);
  }
  for (const auto& r : out.rows) out.evaluated += r.has_value();
  return out;
}

// A sweep cut short by the time budget reports exit 65 unless it already
// found a counterexample.
int with_coverage(int exit_code, const Evaluation& ev) {
  if (exit_code == kExitClean && ev.evaluated < ev.rows.size()) return kExitResource;
  return exit_code;
}

json coverage(const Evaluation& ev) {
  return json{{"evaluated", ev.evaluated}, {"total", ev.rows.size()}, {"complete", ev.evaluated == ev.rows.size()}};
}

SweepReport finish(const std::string& command, const HarnessConfig& config, json rows, json summary,
                   int exit_code, std::chrono::steady_clock::time_point start) {
  SweepReport r;
  r.document = json{{"command", command},
                    {"schema_version", 1},
                    {"parameters", parameters(config)},
                    {"rows", std::move(rows)},
                    {"summary", std::move(summary)},
                    {"exit_code", exit_code}};
  if (config.timing) {
    r.document["duration_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  r.exit_code = exit_code;
  return r;
}

struct Computed {
  int chi = 0;
  std::optional<VillainyCertificate> strong;
  std::optional<VillainyCertificate> weak;
  bool certificates_ok = true;
};

Computed compute(const Graph& g, bool strong, bool weak, const VillainyOptions& options) {
  Computed c;
  c.chi = chromatic_number(g);
  if (strong) {
    c.strong = villainy(g, options);
    c.certificates_ok = c.certificates_ok && verify_certificate(g, *c.strong).empty();
  }
  if (weak) {
    c.weak = weak_villainy(g, options);
    c.certificates_ok = c.certificates_ok && verify_certificate(g, *c.weak).empty();
  }
  return c;
}

std::optional<int> value_of(const std::optional<VillainyCertificate>& cert) {
  if (!cert) return std::nullopt;
  return cert->value;
}

json collect_rows(const Evaluation& ev) {
  json rows = json::array();
  for (const auto& r : ev.rows) {
    if (r) rows.push_back(*r);
  }
  return rows;
}

}  // namespace

void validate(const HarnessConfig& config) {
  if (config.max_n < 1) throw std::invalid_argument("--max-n must be >= 1");
  if (config.exact_bound < 1 || config.exact_bound > 12) {
    throw std::invalid_argument("--exact-bound must be in 1..12");
  }
  if (!(config.time_budget_seconds > 0)) throw std::invalid_argument("--time-budget must be > 0");
  if (config.workers < 0) throw std::invalid_argument("--workers must be >= 0");
}

HarnessConfig config_from_environment() {
  HarnessConfig config;
  if (const char* env = std::getenv("VILLAINY_MAX_N"); env != nullptr && *env != '\0') {
    try {
      config.max_n = std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("VILLAINY_MAX_N must be an integer");
    }
  }
#ifdef VILLAINY_DATA_DIR
  config.adjudication_path = std::string(VILLAINY_DATA_DIR) + "/adjudication_case2.json";
#endif
  return config;
}

json to_json(const Coloring& c) { return json(std::vector<int>(c.assignment().begin(), c.assignment().end())); }

json to_json(const VillainyCertificate& cert) {
  std::vector<int> changed;
  for (VertexMask r = cert.changed; r != 0; r &= r - 1) changed.push_back(lowest_vertex(r));
  return json{{"value", cert.value},
              {"worst", to_json(cert.worst)},
              {"repair", to_json(cert.repair)},
              {"changed", changed},
              {"mode", to_string(cert.mode)},
              {"exhaustive", cert.exhaustive}};
}

std::string render_json(const SweepReport& report) { return report.document.dump(2) + "\n"; }

std::string render_csv(const SweepReport& report) {
  const json& rows = report.rows();
  std::ostringstream os;
  if (rows.empty()) return "";
  std::vector<std::string> columns;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) columns.push_back(it.key());
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const json& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) os << ',';
      const json& v = row.contains(columns[i]) ? row.at(columns[i]) : json(nullptr);
      if (v.is_null()) continue;
      std::string cell = v.is_string() ? v.get<std::string>() : v.dump();
      if (cell.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : cell) {
          if (ch == '"') quoted += '"';
          quoted += ch;
        }
        cell = quoted + "\"";
      }
      os << cell;
    }
    os << '\n';
  }
  return os.str();
}

std::string render(const SweepReport& report, ReportFormat format) {
  return format == ReportFormat::kJson ? render_json(report) : render_csv(report);
}

// ---------------------------------------------------------------------------

SweepReport cmd_inspect(const std::string& input, const HarnessConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<Graph> parsed;
  std::string kind;
  if (input.find('(') != std::string::npos) {
    try {
      parsed = build_family(parse_family(input));
      kind = "family";
    } catch (const std::exception& e) {
      throw HarnessError(kExitUsage, e.what());
    }
  } else {
    try {
      parsed = parse_graph6(input);
      kind = "graph6";
    } catch (const Graph6ParseError& e) {
      throw HarnessError(kExitUsage, e.what());
    }
  }
  const Graph& g = *parsed;
  if (g.order() > config.exact_bound) {
    throw HarnessError(kExitResource, "order " + std::to_string(g.order()) + " exceeds the exact-search bound " +
                                          std::to_string(config.exact_bound));
  }

  const VillainyOptions options = engine_options(config, config.exact_bound);
  Computed c = compute(g, config.wants_strong(), config.wants_weak(), options);
  auto kb = known_villainy(g);
  auto kw = known_weak_villainy(g);
  const StructureReport s = analyze_structure(g);

  json lemmas = json::array();
  for (const auto& l : lemma_implications(g)) {
    lemmas.push_back({{"lemma", to_string(l.id)},
                      {"status", l.status == LemmaStatus::kFired ? "fired" : "exception"},
                      {"bound", l.status == LemmaStatus::kFired ? json(l.bound) : json(nullptr)},
                      {"witness", l.witness}});
  }
  auto agrees = [](const std::optional<KnownValue>& k, const std::optional<VillainyCertificate>& cert) -> json {
    if (!k || !cert) return nullptr;
    return k->value == cert->value;
  };
  json consistency{{"B_matches_known", agrees(kb, c.strong)},
                   {"Bw_matches_known", agrees(kw, c.weak)},
                   {"certificates_valid", c.certificates_ok}};
  std::vector<int> component_sizes;
  for (VertexMask comp : s.components) component_sizes.push_back(popcount(comp));
  json structure{{"edges", g.edge_count()},
                 {"component_sizes", component_sizes},
                 {"bipartite", s.bipartite()},
                 {"matching", s.matching_size},
                 {"isolated", s.isolated},
                 {"degrees", s.degrees}};
  if (s.bipartite()) {
    structure["bipartition"] = {popcount(s.bipartition->first), popcount(s.bipartition->second)};
  }

  json row{{"input", input},
           {"input_kind", kind},
           {"graph6", emit_graph6(g)},
           {"n", g.order()},
           {"chi", c.chi},
           {"B", c.strong ? to_json(*c.strong) : json(nullptr)},
           {"Bw", c.weak ? to_json(*c.weak) : json(nullptr)},
           {"label", label_json(classify_theorem5(g))},
           {"known", {{"B", known_json(kb)}, {"Bw", known_json(kw)}}},
           {"lemmas", lemmas},
           {"structure", structure},
           {"consistency", consistency}};
  json summary{{"B", optional_int(value_of(c.strong))},
               {"Bw", optional_int(value_of(c.weak))},
               {"consistent", c.certificates_ok && consistency["B_matches_known"] != false &&
                                  consistency["Bw_matches_known"] != false}};
  return finish("inspect", config, json::array({row}), summary, kExitClean, start);
}

SweepReport cmd_sweep_theorem5(const HarnessConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto items = sweep_graphs(config);
  const VillainyOptions options = engine_options(config, config.exact_bound);

  Evaluation ev = evaluate(items, config, [&](const GraphItem& item) {
    Computed c = compute(item.graph, true, config.wants_weak(), options);
    ClassLabel label = classify_theorem5(item.graph);
    json flags = json::array();
    int b = c.strong->value;
    if (b == 2) flags.push_back(label == ClassLabel::kNone ? "counterexample" : "b2-classified");
    if (b != 2 && label != ClassLabel::kNone) flags.push_back("slack");
    if (!c.certificates_ok) flags.push_back("bad-certificate");
    return json{{"graph6", item.graph6}, {"n", item.graph.order()}, {"chi", c.chi},
                {"B", b}, {"Bw", optional_int(value_of(c.weak))}, {"label", label_json(label)},
                {"flags", flags}};
  });

  json rows = collect_rows(ev);
  json counterexamples = json::array(), slack = json::array(), case2 = json::array();
  int b2 = 0, classified = 0, bad = 0;
  for (const json& r : rows) {
    bool labelled = !r["label"].is_null();
    classified += labelled;
    if (r["B"] == 2) {
      ++b2;
      if (!labelled) counterexamples.push_back(r["graph6"]);
    } else if (labelled) {
      slack.push_back({{"graph6", r["graph6"]}, {"label", r["label"]}, {"B", r["B"]}});
    }
    if (r["label"] == "Case2") case2.push_back({{"graph6", r["graph6"]}, {"B", r["B"]}});
    for (const auto& f : r["flags"]) bad += f == "bad-certificate";
  }
  json summary{{"graphs", rows.size()},
               {"b2", b2},
               {"classified", classified},
               {"counterexamples", counterexamples},
               {"slack", slack},
               {"case2", case2},
               {"bad_certificates", bad},
               {"coverage", coverage(ev)}};
  int exit_code = counterexamples.empty() && bad == 0 ? kExitClean : kExitCounterexample;
  return finish("sweep-theorem5", config, rows, summary, with_coverage(exit_code, ev), start);
}

bool is_contested_bipartite(const Graph& g) {
  if (g.order() != 6) return false;
  StructureReport s = analyze_structure(g);
  return s.connected() && s.bipartite() && popcount(s.bipartition->first) == 3;
}

std::vector<AdjudicationEntry> load_adjudication(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw HarnessError(kExitUsage, std::string("adjudication file: ") + e.what());
  }
  std::vector<AdjudicationEntry> out;
  for (const auto& e : doc.at("graphs")) {
    out.push_back({e.at("graph6").get<std::string>(), e.at("B").get<int>(), e.at("Bw").get<int>()});
  }
  return out;
}

nlohmann::json compute_adjudication(const HarnessConfig& config) {
  const VillainyOptions options = engine_options(config, 6);
  json graphs = json::array();
  for (const Graph& g : enumerate_nonisomorphic(6, is_contested_bipartite)) {
    StructureReport s = analyze_structure(g);
    graphs.push_back({{"graph6", canonical_form(g)},
                      {"edges", g.edge_count()},
                      {"B", villainy(g, options).value},
                      {"Bw", weak_villainy(g, options).value},
                      {"B_formula", bipartite_villainy_formula(6, popcount(s.bipartition->first))},
                      {"Bw_formula", bipartite_weak_villainy_formula(6, popcount(s.bipartition->first))}});
  }
  return json{{"version", 1},
              {"family", "connected bipartite, 6 vertices, parts 3|3"},
              {"graphs", graphs}};
}

SweepReport cmd_sweep_bipartite(const HarnessConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  auto all = sweep_graphs(config);
  std::vector<GraphItem> items;
  for (auto& item : all) {
    if (item.graph.order() < 3) continue;
    StructureReport s = analyze_structure(item.graph);
    if (s.connected() && s.bipartite()) items.push_back(std::move(item));
  }
  std::map<std::string, AdjudicationEntry> frozen;
  bool loaded = false;
  if (!config.adjudication_path.empty()) {
    for (auto& e : load_adjudication(config.adjudication_path)) frozen[e.canonical_graph6] = e;
    loaded = true;
  }

  const VillainyOptions options = engine_options(config, config.exact_bound);
  Evaluation ev = evaluate(items, config, [&](const GraphItem& item) {
    const Graph& g = item.graph;
    StructureReport s = analyze_structure(g);
    int x = popcount(s.bipartition->first);
    Computed c = compute(g, config.wants_strong(), config.wants_weak(), options);
    int fb = bipartite_villainy_formula(g.order(), x);
    int fw = bipartite_weak_villainy_formula(g.order(), x);
    bool ok = (!c.strong || c.strong->value == fb) && (!c.weak || c.weak->value == fw) && c.certificates_ok;
    std::string status = is_contested_bipartite(g) ? "adjudicated" : (ok ? "match" : "mismatch");
    return json{{"graph6", item.graph6}, {"n", g.order()}, {"x", x},
                {"B", optional_int(value_of(c.strong))}, {"B_formula", fb},
                {"Bw", optional_int(value_of(c.weak))}, {"Bw_formula", fw},
                {"status", status}};
  });

  json rows = collect_rows(ev);
  json mismatches = json::array(), adjudicated = json::array();
  int matches = 0, drift = 0;
  for (const json& r : rows) {
    if (r["status"] == "match") {
      ++matches;
    } else if (r["status"] == "mismatch") {
      mismatches.push_back(r);
    } else {
      json entry{{"graph6", r["graph6"]}, {"B", r["B"]}, {"B_formula", r["B_formula"]},
                 {"Bw", r["Bw"]}, {"Bw_formula", r["Bw_formula"]}};
      if (loaded) {
        auto it = frozen.find(canonical_form(parse_graph6(r["graph6"].get<std::string>())));
        bool same = it != frozen.end() && (r["B"].is_null() || r["B"] == it->second.strong) &&
                    (r["Bw"].is_null() || r["Bw"] == it->second.weak);
        entry["frozen_B"] = it != frozen.end() ? json(it->second.strong) : json(nullptr);
        entry["frozen_Bw"] = it != frozen.end() ? json(it->second.weak) : json(nullptr);
        entry["matches_frozen"] = same;
        drift += !same;
      }
      adjudicated.push_back(entry);
    }
  }
  json summary{{"checked", rows.size()},
               {"matches", matches},
               {"mismatches", mismatches},
               {"adjudicated", adjudicated},
               {"adjudication_loaded", loaded},
               {"adjudication_drift", drift},
               {"coverage", coverage(ev)}};
  int exit_code = mismatches.empty() && drift == 0 ? kExitClean : kExitCounterexample;
  return finish("sweep-bipartite", config, rows, summary, with_coverage(exit_code, ev), start);
}

SweepReport cmd_sweep_lemmas(const HarnessConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto items = sweep_graphs(config);
  const VillainyOptions options = engine_options(config, config.exact_bound);

  Evaluation ev = evaluate(items, config, [&](const GraphItem& item) {
    Computed c = compute(item.graph, true, false, options);
    int b = c.strong->value;
    json lemmas = json::array();
    for (const auto& l : lemma_implications(item.graph)) {
      bool fired = l.status == LemmaStatus::kFired;
      lemmas.push_back({{"lemma", to_string(l.id)},
                        {"status", fired ? "fired" : "exception"},
                        {"bound", fired ? json(l.bound) : json(nullptr)},
                        {"holds", fired ? json(b >= l.bound) : json(nullptr)},
                        {"witness", l.witness}});
    }
    return json{{"graph6", item.graph6}, {"n", item.graph.order()}, {"chi", c.chi}, {"B", b},
                {"lemmas", lemmas}, {"certificate_valid", c.certificates_ok}};
  });

  json rows = collect_rows(ev);
  std::map<std::string, int> fired, exceptions;
  json counterexamples = json::array();
  int bad = 0;
  for (const json& r : rows) {
    bad += !r["certificate_valid"].get<bool>();
    for (const json& l : r["lemmas"]) {
      const std::string id = l["lemma"];
      if (l["status"] == "fired") {
        ++fired[id];
        if (!l["holds"].get<bool>()) {
          counterexamples.push_back({{"graph6", r["graph6"]}, {"lemma", id}, {"bound", l["bound"]}, {"B", r["B"]}});
        }
      } else {
        ++exceptions[id];
      }
    }
  }
  json summary{{"graphs", rows.size()},
               {"fired", fired},
               {"exceptions", exceptions},
               {"counterexamples", counterexamples},
               {"bad_certificates", bad},
               {"coverage", coverage(ev)}};
  int exit_code = counterexamples.empty() && bad == 0 ? kExitClean : kExitCounterexample;
  return finish("sweep-lemmas", config, rows, summary, with_coverage(exit_code, ev), start);
}

SweepReport cmd_cycles(int max_k, const HarnessConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (max_k < 2) throw HarnessError(kExitUsage, "--max-k must be >= 2");
  if (max_k > kMaxCycleK) {
    throw HarnessError(kExitResource, "--max-k above " + std::to_string(kMaxCycleK) + " is beyond the exact search");
  }
  VillainyOptions options = engine_options(config, std::max(config.exact_bound, 2 * max_k + 1));
  options.parallel = true;

  json rows = json::array();
  bool all_valid = true, weak_known = true;
  for (int k = 2; k <= max_k; ++k) {
    Graph g = build_family(FamilySpec::cycle(2 * k + 1));
    Computed c = compute(g, config.wants_strong(), config.wants_weak(), options);
    all_valid = all_valid && c.certificates_ok;
    auto agrees = [&](const std::optional<VillainyCertificate>& cert) -> json {
      return cert ? json(cert->value == k) : json(nullptr);
    };
    if (c.weak) weak_known = weak_known && c.weak->value == k;
    rows.push_back({{"k", k},
                    {"n", 2 * k + 1},
                    {"graph6", emit_graph6(g)},
                    {"B", optional_int(value_of(c.strong))},
                    {"Bw", optional_int(value_of(c.weak))},
                    {"conjectured", k},
                    {"B_agrees", agrees(c.strong)},
                    {"Bw_agrees", agrees(c.weak)},
                    {"certificates_valid", c.certificates_ok},
                    {"B_certificate", c.strong ? to_json(*c.strong) : json(nullptr)},
                    {"Bw_certificate", c.weak ? to_json(*c.weak) : json(nullptr)}});
  }
  json summary{{"rows", rows.size()},
               {"certificates_valid", all_valid},
               {"Bw_equals_k", config.wants_weak() ? json(weak_known) : json(nullptr)}};
  HarnessConfig echoed = config;
  echoed.exact_bound = options.exact_bound;
  echoed.max_n = 2 * max_k + 1;
  return finish("cycles", echoed, rows, summary, all_valid ? kExitClean : kExitCounterexample, start);
}

SweepReport cmd_parity(const HarnessConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto items = sweep_graphs(config);
  const VillainyOptions options = engine_options(config, config.exact_bound);

  Evaluation ev = evaluate(items, config, [&](const GraphItem& item) {
    Computed c = compute(item.graph, config.wants_strong(), config.wants_weak(), options);
    auto parity = [](const std::optional<VillainyCertificate>& cert) -> json {
      if (!cert) return nullptr;
      return cert->value % 2 == 0 ? "even" : "odd";
    };
    return json{{"graph6", item.graph6}, {"n", item.graph.order()},
                {"B", optional_int(value_of(c.strong))}, {"B_parity", parity(c.strong)},
                {"Bw", optional_int(value_of(c.weak))}, {"Bw_parity", parity(c.weak)}};
  });

  json rows = collect_rows(ev);
  std::map<std::string, int> hist_b, hist_bw;
  json odd_b = json::array();
  for (const json& r : rows) {
    if (!r["B"].is_null()) {
      ++hist_b[std::to_string(r["B"].get<int>())];
      if (r["B_parity"] == "odd") odd_b.push_back(r["graph6"]);
    }
    if (!r["Bw"].is_null()) ++hist_bw[std::to_string(r["Bw"].get<int>())];
  }
  json claim = nullptr;
  if (config.wants_strong()) claim = odd_b.empty() ? "confirmed" : "refuted";
  json summary{{"graphs", rows.size()},
               {"histogram_B", hist_b},
               {"histogram_Bw", hist_bw},
               {"odd_B", odd_b},
               {"even_claim", claim},
               {"coverage", coverage(ev)}};
  return finish("parity", config, rows, summary, with_coverage(kExitClean, ev), start);
}

}  // namespace villainy
