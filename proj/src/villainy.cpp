#include "villainy/villainy.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace villainy {

const char* to_string(RepairMode mode) { return mode == RepairMode::kStrong ? "strong" : "weak"; }

namespace {

// Every proper coloring a repair may land on, stored flat, plus for each
// (vertex, color) the indices of colorings that give the vertex that color.
struct RepairTable {
  int n = 0;
  int k = 0;
  std::vector<Color> colorings;
  std::vector<std::vector<std::uint32_t>> hits;

  std::size_t size() const { return n == 0 ? 0 : colorings.size() / static_cast<std::size_t>(n); }
  const std::vector<std::uint32_t>& agreeing(int v, int c) const {
    return hits[static_cast<std::size_t>(v * k + c)];
  }
};

RepairTable build_table(const Graph& g, int k, const std::optional<MultiplicityVector>& m) {
  RepairTable t;
  t.n = g.order();
  t.k = k;
  t.hits.resize(static_cast<std::size_t>(t.n * k));
  std::uint32_t index = 0;
  for_each_proper_coloring(g, k, m, [&](std::span<const Color> a) {
    t.colorings.insert(t.colorings.end(), a.begin(), a.end());
    for (int v = 0; v < t.n; ++v) t.hits[static_cast<std::size_t>(v * k + a[v])].push_back(index);
    ++index;
  });
  return t;
}

RepairTable table_for(const Graph& g, const MultiplicityVector& m, RepairMode mode) {
  if (m.total() != g.order()) throw InfeasibleMultiplicity("multiplicities do not sum to the graph order");
  RepairTable t = mode == RepairMode::kStrong ? build_table(g, m.colors(), m) : build_table(g, m.colors(), std::nullopt);
  if (t.size() == 0) throw InfeasibleMultiplicity("no proper coloring realizes the requested palette");
  if (mode == RepairMode::kWeak) {
    bool realized = false;
    for_each_proper_coloring(g, m.colors(), m, [&](std::span<const Color>) { realized = true; });
    if (!realized) throw InfeasibleMultiplicity("no proper coloring has the requested multiplicities");
  }
  return t;
}

// colors_before_in_group[c]: labels c' < c with m[c'] == m[c]. A color may
// only be opened once all of those are in use, so each orbit under swapping
// equal-count colors is visited through its lexicographically smallest member.
std::vector<std::vector<int>> symmetry_groups(const MultiplicityVector& m) {
  std::vector<std::vector<int>> before(static_cast<std::size_t>(m.colors()));
  for (int c = 0; c < m.colors(); ++c)
    for (int d = 0; d < c; ++d)
      if (m.counts[d] == m.counts[c]) before[c].push_back(d);
  return before;
}

class WorstSearch {
 public:
  WorstSearch(const RepairTable& table, const MultiplicityVector& m)
      : table_(table),
        n_(table.n),
        before_(symmetry_groups(m)),
        budget_(m.counts),
        opened_(static_cast<std::size_t>(m.colors()), 0),
        agree_(table.size(), 0),
        assignment_(static_cast<std::size_t>(n_), 0) {}

  // Colors allowed at the next vertex, in increasing order.
  template <typename F>
  void for_each_choice(F&& f) const {
    for (int c = 0; c < table_.k; ++c) {
      if (budget_[c] == 0) continue;
      if (!opened_[c]) {
        bool ok = true;
        for (int d : before_[c]) ok = ok && opened_[d];
        if (!ok) continue;
      }
      f(c);
    }
  }

  int place(int v, int c) {
    assignment_[v] = static_cast<Color>(c);
    --budget_[c];
    ++opened_[c];
    int top = 0;
    for (std::uint32_t idx : table_.agreeing(v, c)) top = std::max(top, static_cast<int>(++agree_[idx]));
    return top;
  }

  void unplace(int v, int c) {
    for (std::uint32_t idx : table_.agreeing(v, c)) --agree_[idx];
    --opened_[c];
    ++budget_[c];
  }

  // Serial search from depth `v`. Prunes when the value cannot beat the local
  // incumbent, or cannot reach the shared one (strictly less).
  void descend(int v, int partial_max, const std::atomic<int>* shared) {
    int ceiling = n_ - partial_max;
    if (ceiling <= best_value_) return;
    if (shared != nullptr && ceiling < shared->load(std::memory_order_relaxed)) return;
    if (v == n_) {
      best_value_ = ceiling;
      best_ = assignment_;
      return;
    }
    for_each_choice([&](int c) {
      int top = place(v, c);
      descend(v + 1, std::max(partial_max, top), shared);
      unplace(v, c);
    });
  }

  int apply_prefix(const std::vector<Color>& prefix) {
    int top = 0;
    for (std::size_t v = 0; v < prefix.size(); ++v) top = std::max(top, place(static_cast<int>(v), prefix[v]));
    return top;
  }

  int best_value() const { return best_value_; }
  const std::vector<Color>& best() const { return best_; }

 private:
  const RepairTable& table_;
  int n_;
  std::vector<std::vector<int>> before_;
  std::vector<int> budget_;
  std::vector<int> opened_;
  std::vector<std::uint16_t> agree_;
  std::vector<Color> assignment_;
  int best_value_ = -1;
  std::vector<Color> best_;
};

WorstAssignment run_serial(const RepairTable& table, const MultiplicityVector& m) {
  WorstSearch search(table, m);
  search.descend(0, 0, nullptr);
  return {Coloring(search.best(), m.colors()), search.best_value()};
}

// Expands the search tree breadth-first (children in increasing color order,
// so the prefix list stays lexicographic) until there is enough work to share.
std::vector<std::vector<Color>> make_prefixes(const RepairTable& table, const MultiplicityVector& m,
                                              std::size_t target) {
  std::vector<std::vector<Color>> level{{}};
  const auto before = symmetry_groups(m);
  while (level.size() < target && level.front().size() < static_cast<std::size_t>(table.n)) {
    std::vector<std::vector<Color>> next;
    for (const auto& prefix : level) {
      std::vector<int> used(static_cast<std::size_t>(m.colors()), 0);
      for (Color c : prefix) ++used[c];
      for (int c = 0; c < m.colors(); ++c) {
        if (used[c] == m.counts[c]) continue;
        bool ok = used[c] > 0;
        if (!ok) {
          ok = true;
          for (int d : before[c]) ok = ok && used[d] > 0;
        }
        if (!ok) continue;
        auto child = prefix;
        child.push_back(static_cast<Color>(c));
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return level;
}

WorstAssignment run_parallel(const RepairTable& table, const MultiplicityVector& m) {
  int threads = 1;
#ifdef _OPENMP
  if (!omp_in_parallel()) threads = omp_get_max_threads();
#endif
  if (threads <= 1) return run_serial(table, m);

  const auto prefixes = make_prefixes(table, m, static_cast<std::size_t>(threads) * 8);
  const long tasks = static_cast<long>(prefixes.size());
  std::vector<int> values(prefixes.size(), -1);
  std::vector<std::vector<Color>> winners(prefixes.size());
  std::atomic<int> shared{-1};

#pragma omp parallel for schedule(dynamic, 1)
  for (long t = 0; t < tasks; ++t) {
    WorstSearch search(table, m);
    const auto& prefix = prefixes[static_cast<std::size_t>(t)];
    int top = search.apply_prefix(prefix);
    search.descend(static_cast<int>(prefix.size()), top, &shared);
    values[static_cast<std::size_t>(t)] = search.best_value();
    if (search.best_value() >= 0) {
      winners[static_cast<std::size_t>(t)] = search.best();
      int seen = shared.load();
      while (seen < search.best_value() && !shared.compare_exchange_weak(seen, search.best_value())) {
      }
    }
  }

  std::size_t pick = 0;
  for (std::size_t t = 1; t < values.size(); ++t) {
    if (values[t] > values[pick]) pick = t;
  }
  return {Coloring(winners[pick], m.colors()), values[pick]};
}

VillainyCertificate trivial_certificate(int n, RepairMode mode) {
  std::vector<Color> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), Color{0});
  Coloring c(identity, n);
  return {0, c, c, 0, mode, true};
}

}  // namespace

std::optional<Repair> repair_distance(const Graph& g, const Coloring& c, RepairMode mode) {
  if (c.size() != g.order()) throw std::invalid_argument("coloring length differs from graph order");
  std::optional<MultiplicityVector> m;
  if (mode == RepairMode::kStrong) m = MultiplicityVector{c.counts()};

  int best = -1;
  std::vector<Color> best_h;
  for_each_proper_coloring(g, c.palette(), m, [&](std::span<const Color> h) {
    int agree = 0;
    for (int v = 0; v < g.order(); ++v) agree += h[v] == c[v];
    if (agree > best) {
      best = agree;
      best_h.assign(h.begin(), h.end());
    }
  });
  if (best < 0) return std::nullopt;
  return Repair{g.order() - best, Coloring(std::move(best_h), c.palette())};
}

WorstAssignment worst_assignment_serial(const Graph& g, const MultiplicityVector& m, RepairMode mode) {
  return run_serial(table_for(g, m, mode), m);
}

WorstAssignment worst_assignment(const Graph& g, const MultiplicityVector& m, RepairMode mode) {
  return run_parallel(table_for(g, m, mode), m);
}

VillainyCertificate graph_villainy(const Graph& g, RepairMode mode, const VillainyOptions& options) {
  const int n = g.order();
  if (n > options.exact_bound) {
    throw OrderTooLarge("order " + std::to_string(n) + " exceeds the exact-search bound " +
                        std::to_string(options.exact_bound) + "; raise the bound to proceed");
  }
  const int chi = chromatic_number(g);
  if (chi == n) return trivial_certificate(n, mode);

  std::optional<Coloring> worst;
  int value = -1;
  if (options.domain == OuterDomain::kProperOnly) {
    for_each_proper_coloring(g, chi, std::nullopt, [&](std::span<const Color> a) {
      Coloring c(std::vector<Color>(a.begin(), a.end()), chi);
      const auto counts = c.counts();
      if (std::count(counts.begin(), counts.end(), 0) > 0) return;
      int v = repair_distance(g, c, mode)->value;
      if (v > value) {
        value = v;
        worst = c;
      }
    });
  } else {
    for (const MultiplicityVector& profile : feasible_multiplicities(g, chi)) {
      RepairTable table = table_for(g, profile, mode);
      WorstAssignment wa = options.parallel ? run_parallel(table, profile) : run_serial(table, profile);
      if (wa.value > value) {
        value = wa.value;
        worst = wa.worst;
      }
    }
  }

  Repair r = *repair_distance(g, *worst, mode);
  VertexMask changed = 0;
  for (int v = 0; v < n; ++v) {
    if ((*worst)[v] != r.repair[v]) changed |= bit(v);
  }
  return {value, *worst, r.repair, changed, mode, true};
}

VillainyCertificate villainy(const Graph& g, const VillainyOptions& options) {
  return graph_villainy(g, RepairMode::kStrong, options);
}

VillainyCertificate weak_villainy(const Graph& g, const VillainyOptions& options) {
  return graph_villainy(g, RepairMode::kWeak, options);
}

std::vector<std::string> verify_certificate(const Graph& g, const VillainyCertificate& cert) {
  std::vector<std::string> problems;
  const int n = g.order();
  if (cert.worst.size() != n || cert.repair.size() != n) {
    problems.emplace_back("coloring length differs from graph order");
    return problems;
  }
  if (cert.worst.palette() != cert.repair.palette()) problems.emplace_back("worst and repair use different palettes");
  if (!is_proper(g, cert.repair)) problems.emplace_back("repair is not a proper coloring");

  VertexMask diff = 0;
  for (int v = 0; v < n; ++v) {
    if (cert.worst[v] != cert.repair[v]) diff |= bit(v);
  }
  if (diff != cert.changed) problems.emplace_back("changed set does not match the differing vertices");
  if (popcount(diff) != cert.value) problems.emplace_back("value differs from the number of recolored vertices");
  if (cert.mode == RepairMode::kStrong && cert.worst.counts() != cert.repair.counts()) {
    problems.emplace_back("strong repair changes color multiplicities");
  }

  const int chi = chromatic_number(g);
  if (cert.worst.palette() != chi) problems.emplace_back("palette size differs from the chromatic number");
  auto profile = MultiplicityVector{cert.worst.counts()}.sorted();
  if (!feasible_multiplicities(g, chi).contains(profile)) {
    problems.emplace_back("worst coloring is not a rearrangement of an optimal proper coloring");
  }

  auto best = repair_distance(g, cert.worst, cert.mode);
  if (!best) {
    problems.emplace_back("no repair exists for the worst coloring");
  } else if (best->value != cert.value) {
    problems.emplace_back("a closer proper coloring exists (distance " + std::to_string(best->value) + ")");
  }
  return problems;
}

}  // namespace villainy
