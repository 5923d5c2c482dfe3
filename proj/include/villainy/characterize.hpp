#pragma once

#include <optional>
#include <string>
#include <vector>

#include "villainy/graph.hpp"

namespace villainy {

/// Shapes a graph with villainy 2 must have, in the fixed priority order used
/// to pick one label when several apply.
enum class ClassLabel {
  kNone = 0,
  kStar,                   // K_{1,t}, t >= 2
  kBipartite33,            // connected bipartite, 6 vertices, parts 3|3
  kPath4Family,            // P4, P4+K1, P4+K2
  kCycle4Family,           // C4, C4+K1, C4+K2
  kCycle5,                 // C5
  kMatching,               // 2K2, 3K2
  kTriangleEdge,           // K3+K2
  kTwoTriangles,           // K3+K3
  kTwoEdgesIsolated,       // 2K2+K1
  kCompleteMinusLowVertex, // n >= 4, deg(v) <= 1, G-v complete
  kPath3Isolated,          // P3+rK1, r >= 1
  kEdgeIsolated,           // K2+rK1, r >= 1
};

/// "Case1".."Case12", or "NONE".
std::string to_string(ClassLabel label);
int case_number(ClassLabel label);

ClassLabel classify_theorem5(const Graph& g);

enum class Quantity { kStrong, kWeak };

struct KnownValue {
  Quantity quantity = Quantity::kStrong;
  int value = 0;
  std::string source;
};

/// 0 for complete or edgeless graphs; the bipartite closed form for connected
/// bipartite graphs with n >= 3; otherwise empty.
std::optional<KnownValue> known_villainy(const Graph& g);
/// 0 for complete or edgeless; 1 for the weak-villainy-one family; the weak
/// bipartite closed form for connected bipartite n >= 3; otherwise empty.
std::optional<KnownValue> known_weak_villainy(const Graph& g);

/// Closed-form values for a connected bipartite graph with smaller side x.
int bipartite_villainy_formula(int n, int x);
int bipartite_weak_villainy_formula(int n, int x);

/// n >= 3 and the edges are a single edge or two edges sharing a vertex, or
/// n >= 4 and the graph is a complete graph plus an isolated or pendant vertex.
bool in_weak_villainy_one_family(const Graph& g);
/// Some vertex of degree <= 1 whose removal leaves a complete graph.
bool has_low_vertex_over_clique(const Graph& g);

enum class LemmaId {
  kTriangleClass3,
  kClassSize4,
  kDiamond,
  kMatching3,
  kOrder7Chi3,
  kOrder6Chi3,
  kOrderAtMost5Chi3,
  kChiAtLeast4,
};

std::string to_string(LemmaId id);

enum class LemmaStatus { kFired, kException };

/// A lemma whose hypothesis holds on the graph. kFired carries the lower
/// bound it asserts on B(G); kException means the graph is one of the lemma's
/// listed exceptions and nothing is asserted.
struct LemmaImplication {
  LemmaId id;
  LemmaStatus status = LemmaStatus::kFired;
  int bound = 0;
  std::string witness;
};

/// Requires chromatic numbers and class-size profiles; intended for n <= 10.
std::vector<LemmaImplication> lemma_implications(const Graph& g);

}  // namespace villainy
