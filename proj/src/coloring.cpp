#include "villainy/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace villainy {

Coloring::Coloring(std::vector<Color> assignment, int palette)
    : assignment_(std::move(assignment)), palette_(palette) {
  if (palette_ < 1) throw std::invalid_argument("palette size must be >= 1");
  if (assignment_.empty()) throw std::invalid_argument("coloring must cover at least one vertex");
  for (Color c : assignment_) {
    if (c >= palette_) throw std::invalid_argument("color " + std::to_string(c) + " outside palette");
  }
}

std::vector<int> Coloring::counts() const {
  std::vector<int> out(static_cast<std::size_t>(palette_), 0);
  for (Color c : assignment_) ++out[c];
  return out;
}

std::vector<VertexMask> Coloring::classes() const {
  std::vector<VertexMask> out(static_cast<std::size_t>(palette_), 0);
  for (std::size_t v = 0; v < assignment_.size(); ++v) out[assignment_[v]] |= bit(static_cast<int>(v));
  return out;
}

int MultiplicityVector::total() const {
  int s = 0;
  for (int c : counts) s += c;
  return s;
}

MultiplicityVector MultiplicityVector::sorted() const {
  MultiplicityVector out{counts};
  std::sort(out.counts.begin(), out.counts.end(), std::greater<>());
  return out;
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.size() != g.order()) throw std::invalid_argument("coloring length differs from graph order");
  for (int u = 0; u < g.order(); ++u) {
    for (VertexMask r = g.neighbors(u); r != 0; r &= r - 1) {
      if (c[u] == c[lowest_vertex(r)]) return false;
    }
  }
  return true;
}

int greedy_clique_size(const Graph& g) {
  int best = 1;
  for (int start = 0; start < g.order(); ++start) {
    VertexMask candidates = g.neighbors(start);
    int size = 1;
    while (candidates != 0) {
      int pick = -1, pick_deg = -1;
      for (VertexMask r = candidates; r != 0; r &= r - 1) {
        int v = lowest_vertex(r);
        int d = popcount(g.neighbors(v) & candidates);
        if (d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      ++size;
      candidates &= g.neighbors(pick);
    }
    best = std::max(best, size);
  }
  return best;
}

namespace {

// Uncolored vertex with most distinct neighbor colors; ties go to higher
// degree, then lower index.
int pick_saturated(const Graph& g, const std::vector<int>& color, const std::vector<VertexMask>& classes) {
  int pick = -1, pick_sat = -1, pick_deg = -1;
  for (int v = 0; v < g.order(); ++v) {
    if (color[v] >= 0) continue;
    int sat = 0;
    for (VertexMask cls : classes) sat += (g.neighbors(v) & cls) != 0;
    int deg = g.degree(v);
    if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
      pick = v;
      pick_sat = sat;
      pick_deg = deg;
    }
  }
  return pick;
}

bool extend_k_coloring(const Graph& g, int k, std::vector<int>& color, std::vector<VertexMask>& classes,
                       int remaining) {
  if (remaining == 0) return true;
  int v = pick_saturated(g, color, classes);
  int used = static_cast<int>(classes.size());
  for (int c = 0; c < used; ++c) {
    if (g.neighbors(v) & classes[c]) continue;
    color[v] = c;
    classes[c] |= bit(v);
    if (extend_k_coloring(g, k, color, classes, remaining - 1)) return true;
    classes[c] &= ~bit(v);
  }
  if (used < k) {
    color[v] = used;
    classes.push_back(bit(v));
    if (extend_k_coloring(g, k, color, classes, remaining - 1)) return true;
    classes.pop_back();
  }
  color[v] = -1;
  return false;
}

}  // namespace

int greedy_color_count(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  std::vector<VertexMask> classes;
  for (int step = 0; step < g.order(); ++step) {
    int v = pick_saturated(g, color, classes);
    int c = 0;
    while (c < static_cast<int>(classes.size()) && (g.neighbors(v) & classes[c])) ++c;
    if (c == static_cast<int>(classes.size())) classes.push_back(0);
    classes[c] |= bit(v);
    color[v] = c;
  }
  return static_cast<int>(classes.size());
}

bool is_k_colorable(const Graph& g, int k) {
  if (k < 1) return false;
  std::vector<int> color(g.order(), -1);
  std::vector<VertexMask> classes;
  return extend_k_coloring(g, k, color, classes, g.order());
}

int chromatic_number(const Graph& g) {
  int lower = greedy_clique_size(g);
  int upper = greedy_color_count(g);
  for (int k = lower; k < upper; ++k) {
    if (is_k_colorable(g, k)) return k;
  }
  return upper;
}

namespace {

struct ProperWalker {
  const Graph& g;
  int k;
  std::vector<int> budget;  // empty when unconstrained
  const ColoringVisitor& visit;
  std::vector<Color> assignment;
  std::vector<VertexMask> classes;

  void walk(int v) {
    if (v == g.order()) {
      visit(assignment);
      return;
    }
    for (int c = 0; c < k; ++c) {
      if (g.neighbors(v) & classes[c]) continue;
      if (!budget.empty()) {
        if (budget[c] == 0) continue;
        --budget[c];
      }
      assignment[v] = static_cast<Color>(c);
      classes[c] |= bit(v);
      walk(v + 1);
      classes[c] &= ~bit(v);
      if (!budget.empty()) ++budget[c];
    }
  }
};

}  // namespace

void for_each_proper_coloring(const Graph& g, int k, const std::optional<MultiplicityVector>& m,
                              const ColoringVisitor& visit) {
  if (k < 1) throw std::invalid_argument("palette size must be >= 1");
  if (k > 255) throw std::invalid_argument("palette size must be <= 255");
  std::vector<int> budget;
  if (m) {
    if (m->colors() != k) throw std::invalid_argument("multiplicity vector length differs from palette");
    if (m->total() != g.order()) return;
    for (int c : m->counts) {
      if (c < 0) throw std::invalid_argument("negative multiplicity");
    }
    budget = m->counts;
  }
  ProperWalker walker{g, k, std::move(budget), visit,
                      std::vector<Color>(static_cast<std::size_t>(g.order()), 0),
                      std::vector<VertexMask>(static_cast<std::size_t>(k), 0)};
  walker.walk(0);
}

std::vector<Coloring> enumerate_proper_colorings(const Graph& g, int k,
                                                 const std::optional<MultiplicityVector>& m) {
  std::vector<Coloring> out;
  for_each_proper_coloring(g, k, m, [&](std::span<const Color> a) {
    out.emplace_back(std::vector<Color>(a.begin(), a.end()), k);
  });
  return out;
}

namespace {

// Colors are introduced in order (a new color is always the next unused
// label), so each partition into classes is visited once.
void collect_profiles(const Graph& g, int chi, int v, std::vector<int>& sizes, std::vector<VertexMask>& classes,
                      std::set<MultiplicityVector>& out) {
  const int n = g.order();
  int used = static_cast<int>(classes.size());
  if (n - v < chi - used) return;
  if (v == n) {
    MultiplicityVector m{sizes};
    out.insert(m.sorted());
    return;
  }
  for (int c = 0; c < used; ++c) {
    if (g.neighbors(v) & classes[c]) continue;
    classes[c] |= bit(v);
    ++sizes[c];
    collect_profiles(g, chi, v + 1, sizes, classes, out);
    --sizes[c];
    classes[c] &= ~bit(v);
  }
  if (used < chi) {
    classes.push_back(bit(v));
    sizes.push_back(1);
    collect_profiles(g, chi, v + 1, sizes, classes, out);
    sizes.pop_back();
    classes.pop_back();
  }
}

}  // namespace

std::set<MultiplicityVector> feasible_multiplicities(const Graph& g, int chi) {
  std::set<MultiplicityVector> out;
  std::vector<int> sizes;
  std::vector<VertexMask> classes;
  collect_profiles(g, chi, 0, sizes, classes, out);
  return out;
}

std::set<MultiplicityVector> feasible_multiplicities(const Graph& g) {
  return feasible_multiplicities(g, chromatic_number(g));
}

}  // namespace villainy
