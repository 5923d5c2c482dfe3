#include "villainy/characterize.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "villainy/coloring.hpp"

namespace villainy {

namespace {

struct Target {
  int order;
  int edges;
  CanonicalForm form;
};

Target make_target(const std::string& expr) {
  Graph g = build_family(parse_family(expr));
  return {g.order(), g.edge_count(), canonical_form(g)};
}

bool matches_any(const Graph& g, const std::vector<Target>& targets) {
  std::optional<CanonicalForm> form;
  for (const auto& t : targets) {
    if (t.order != g.order() || t.edges != g.edge_count()) continue;
    if (!form) form = canonical_form(g);
    if (*form == t.form) return true;
  }
  return false;
}

struct Targets {
  std::vector<Target> path4 = {make_target("path(4)"), make_target("disjoint_union(path(4), empty(1))"),
                               make_target("disjoint_union(path(4), complete(2))")};
  std::vector<Target> cycle4 = {make_target("cycle(4)"), make_target("disjoint_union(cycle(4), empty(1))"),
                                make_target("disjoint_union(cycle(4), complete(2))")};
  std::vector<Target> cycle5 = {make_target("cycle(5)")};
  std::vector<Target> matching = {make_target("disjoint_union(complete(2), complete(2))"),
                                  make_target("disjoint_union(complete(2), complete(2), complete(2))")};
  std::vector<Target> triangle_edge = {make_target("disjoint_union(complete(3), complete(2))")};
  std::vector<Target> two_triangles = {make_target("disjoint_union(complete(3), complete(3))")};
  std::vector<Target> two_edges_isolated = {make_target("disjoint_union(complete(2), complete(2), empty(1))")};
  // exceptions of the order <= 5 lemma: C3, C5, C3+K2, C3+K1, triangle with a pendant edge
  std::vector<Target> small_chi3_exceptions = {
      make_target("complete(3)"), make_target("cycle(5)"), make_target("disjoint_union(complete(3), complete(2))"),
      make_target("disjoint_union(complete(3), empty(1))"), paw()};

  static Target paw() {
    Graph h(4);
    h.add_edge(0, 1);
    h.add_edge(1, 2);
    h.add_edge(0, 2);
    h.add_edge(2, 3);
    return {4, 4, canonical_form(h)};
  }
};

const Targets& targets() {
  static const Targets t;
  return t;
}

bool is_star(const Graph& g) {
  const int n = g.order();
  if (n < 3 || g.edge_count() != n - 1) return false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) return true;
  }
  return false;
}

bool two_incident_edges(const Graph& g) {
  if (g.edge_count() != 2) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 2) return true;
  }
  return false;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g, bool need_degree3) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (VertexMask r = g.neighbors(a) & ~all_vertices(a + 1); r != 0; r &= r - 1) {
      int b = lowest_vertex(r);
      for (VertexMask s = g.neighbors(a) & g.neighbors(b) & ~all_vertices(b + 1); s != 0; s &= s - 1) {
        int c = lowest_vertex(s);
        if (!need_degree3 || g.degree(a) >= 3 || g.degree(b) >= 3 || g.degree(c) >= 3) return std::array{a, b, c};
      }
    }
  }
  return std::nullopt;
}

std::string profile_text(const MultiplicityVector& m) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < m.counts.size(); ++i) os << (i ? "," : "") << m.counts[i];
  os << ')';
  return os.str();
}

std::string triangle_text(const std::array<int, 3>& t) {
  return "triangle " + std::to_string(t[0]) + "-" + std::to_string(t[1]) + "-" + std::to_string(t[2]);
}

int classes_at_least(const MultiplicityVector& m, int size) {
  return static_cast<int>(std::count_if(m.counts.begin(), m.counts.end(), [&](int c) { return c >= size; }));
}

// First feasible profile with at least `classes` entries of size >= `size`.
std::optional<MultiplicityVector> profile_with(const std::set<MultiplicityVector>& profiles, int classes, int size) {
  for (const auto& m : profiles) {
    if (classes_at_least(m, size) >= classes) return m;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(ClassLabel label) {
  if (label == ClassLabel::kNone) return "NONE";
  return "Case" + std::to_string(case_number(label));
}

int case_number(ClassLabel label) { return static_cast<int>(label); }

bool has_low_vertex_over_clique(const Graph& g) {
  const int n = g.order();
  if (n < 2) return false;
  const VertexMask all = all_vertices(n);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 1) continue;
    bool clique = true;
    for (int u = 0; u < n && clique; ++u) {
      if (u == v) continue;
      clique = (g.neighbors(u) & ~bit(v)) == (all & ~bit(u) & ~bit(v));
    }
    if (clique) return true;
  }
  return false;
}

bool in_weak_villainy_one_family(const Graph& g) {
  const int n = g.order();
  if (n >= 3 && (g.edge_count() == 1 || two_incident_edges(g))) return true;
  return n >= 4 && !is_complete(g) && has_low_vertex_over_clique(g);
}

ClassLabel classify_theorem5(const Graph& g) {
  const Targets& t = targets();
  const int n = g.order();
  if (is_star(g)) return ClassLabel::kStar;
  if (n == 6) {
    StructureReport s = analyze_structure(g);
    if (s.connected() && s.bipartite() && popcount(s.bipartition->first) == 3) return ClassLabel::kBipartite33;
  }
  // the fixed targets all have at most 6 vertices
  if (n <= kMaxCanonicalOrder) {
    if (matches_any(g, t.path4)) return ClassLabel::kPath4Family;
    if (matches_any(g, t.cycle4)) return ClassLabel::kCycle4Family;
    if (matches_any(g, t.cycle5)) return ClassLabel::kCycle5;
    if (matches_any(g, t.matching)) return ClassLabel::kMatching;
    if (matches_any(g, t.triangle_edge)) return ClassLabel::kTriangleEdge;
    if (matches_any(g, t.two_triangles)) return ClassLabel::kTwoTriangles;
    if (matches_any(g, t.two_edges_isolated)) return ClassLabel::kTwoEdgesIsolated;
  }
  if (n >= 4 && has_low_vertex_over_clique(g)) return ClassLabel::kCompleteMinusLowVertex;
  if (n >= 4 && two_incident_edges(g)) return ClassLabel::kPath3Isolated;
  if (n >= 3 && g.edge_count() == 1) return ClassLabel::kEdgeIsolated;
  return ClassLabel::kNone;
}

int bipartite_villainy_formula(int n, int x) {
  if (x < n - x) return 2 * x;
  return 2 * ((n + 3) / 4);
}

int bipartite_weak_villainy_formula(int n, int x) {
  int cap = 2 * (n / 4) + (n % 4 == 3 ? 1 : 0);
  return std::min(2 * x, cap);
}

std::optional<KnownValue> known_villainy(const Graph& g) {
  if (is_complete(g) || g.edge_count() == 0) return KnownValue{Quantity::kStrong, 0, "complete-or-edgeless"};
  if (g.order() >= 3) {
    StructureReport s = analyze_structure(g);
    if (s.connected() && s.bipartite()) {
      return KnownValue{Quantity::kStrong, bipartite_villainy_formula(g.order(), popcount(s.bipartition->first)),
                        "bipartite-closed-form"};
    }
  }
  return std::nullopt;
}

std::optional<KnownValue> known_weak_villainy(const Graph& g) {
  if (is_complete(g) || g.edge_count() == 0) return KnownValue{Quantity::kWeak, 0, "complete-or-edgeless"};
  if (in_weak_villainy_one_family(g)) return KnownValue{Quantity::kWeak, 1, "weak-one-family"};
  if (g.order() >= 3) {
    StructureReport s = analyze_structure(g);
    if (s.connected() && s.bipartite()) {
      return KnownValue{Quantity::kWeak, bipartite_weak_villainy_formula(g.order(), popcount(s.bipartition->first)),
                        "bipartite-weak-closed-form"};
    }
  }
  return std::nullopt;
}

std::string to_string(LemmaId id) {
  switch (id) {
    case LemmaId::kTriangleClass3: return "triangle-class3";
    case LemmaId::kClassSize4: return "class-size4";
    case LemmaId::kDiamond: return "diamond";
    case LemmaId::kMatching3: return "matching3";
    case LemmaId::kOrder7Chi3: return "order7-chi3";
    case LemmaId::kOrder6Chi3: return "order6-chi3";
    case LemmaId::kOrderAtMost5Chi3: return "order-le5-chi3";
    case LemmaId::kChiAtLeast4: return "chi-ge4";
  }
  return "unknown";
}

std::vector<LemmaImplication> lemma_implications(const Graph& g) {
  const Targets& t = targets();
  const int n = g.order();
  const int chi = chromatic_number(g);
  const auto profiles = feasible_multiplicities(g, chi);
  std::vector<LemmaImplication> out;

  const auto triangle = find_triangle(g, false);
  if (triangle) {
    if (auto m = profile_with(profiles, 1, 3)) {
      out.push_back({LemmaId::kTriangleClass3, LemmaStatus::kFired, 4,
                     triangle_text(*triangle) + ", profile " + profile_text(*m)});
    }
  }
  if (chi >= 3) {
    if (auto m = profile_with(profiles, 1, 4)) {
      out.push_back({LemmaId::kClassSize4, LemmaStatus::kFired, 4,
                     "chi " + std::to_string(chi) + ", profile " + profile_text(*m)});
    }
  }
  if (auto tri = find_triangle(g, true)) {
    if (auto m = profile_with(profiles, 2, 2)) {
      out.push_back({LemmaId::kDiamond, LemmaStatus::kFired, 3,
                     triangle_text(*tri) + " with a degree-3 vertex, profile " + profile_text(*m)});
    }
  }
  const int matching = maximum_matching(g);
  if (matching >= 3) {
    if (auto m = profile_with(profiles, 3, 2)) {
      out.push_back({LemmaId::kMatching3, LemmaStatus::kFired, 3,
                     "matching " + std::to_string(matching) + ", profile " + profile_text(*m)});
    }
  }
  if (chi == 3 && n >= 7) {
    out.push_back({LemmaId::kOrder7Chi3, LemmaStatus::kFired, 3, "order " + std::to_string(n) + ", chi 3"});
  }
  if (chi == 3 && n == 6) {
    if (matches_any(g, t.two_triangles)) {
      out.push_back({LemmaId::kOrder6Chi3, LemmaStatus::kException, 0, "two disjoint triangles"});
    } else {
      out.push_back({LemmaId::kOrder6Chi3, LemmaStatus::kFired, 3, "order 6, chi 3"});
    }
  }
  if (chi == 3 && n <= 5) {
    if (matches_any(g, t.small_chi3_exceptions)) {
      out.push_back({LemmaId::kOrderAtMost5Chi3, LemmaStatus::kException, 0, "listed small exception"});
    } else {
      out.push_back({LemmaId::kOrderAtMost5Chi3, LemmaStatus::kFired, 3, "order " + std::to_string(n) + ", chi 3"});
    }
  }
  if (chi >= 4) {
    if (is_complete(g)) {
      out.push_back({LemmaId::kChiAtLeast4, LemmaStatus::kException, 0, "complete graph"});
    } else if (has_low_vertex_over_clique(g)) {
      out.push_back({LemmaId::kChiAtLeast4, LemmaStatus::kException, 0, "vertex of degree <= 1 over a clique"});
    } else {
      out.push_back({LemmaId::kChiAtLeast4, LemmaStatus::kFired, 3, "chi " + std::to_string(chi)});
    }
  }
  return out;
}

}  // namespace villainy
