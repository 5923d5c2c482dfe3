#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "villainy/graph.hpp"

namespace villainy {

using Color = std::uint8_t;

/// Vertex coloring drawn from the palette 0..k-1. May be improper.
class Coloring {
 public:
  Coloring(std::vector<Color> assignment, int palette);

  int palette() const { return palette_; }
  int size() const { return static_cast<int>(assignment_.size()); }
  Color operator[](int v) const { return assignment_[static_cast<std::size_t>(v)]; }
  const std::vector<Color>& assignment() const { return assignment_; }

  /// Per-color usage counts, indexed by color label.
  std::vector<int> counts() const;
  /// Vertex set of each color class, indexed by color label.
  std::vector<VertexMask> classes() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
  friend auto operator<=>(const Coloring& a, const Coloring& b) { return a.assignment_ <=> b.assignment_; }

 private:
  std::vector<Color> assignment_;
  int palette_;
};

/// Per-color counts. Profiles returned by feasible_multiplicities are sorted
/// nonincreasing; elsewhere entry i is the count of color i.
struct MultiplicityVector {
  std::vector<int> counts;

  int total() const;
  int colors() const { return static_cast<int>(counts.size()); }
  MultiplicityVector sorted() const;

  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
  friend auto operator<=>(const MultiplicityVector& a, const MultiplicityVector& b) {
    return a.counts <=> b.counts;
  }
};

bool is_proper(const Graph& g, const Coloring& c);

int greedy_clique_size(const Graph& g);
/// Colors used by a DSATUR greedy coloring.
int greedy_color_count(const Graph& g);
bool is_k_colorable(const Graph& g, int k);
int chromatic_number(const Graph& g);

using ColoringVisitor = std::function<void(std::span<const Color>)>;

/// Visits every proper coloring over palette 0..k-1 (matching `m` exactly when
/// given) once each, in lexicographic order of the assignment.
void for_each_proper_coloring(const Graph& g, int k, const std::optional<MultiplicityVector>& m,
                              const ColoringVisitor& visit);
std::vector<Coloring> enumerate_proper_colorings(const Graph& g, int k,
                                                 const std::optional<MultiplicityVector>& m = std::nullopt);

/// Sorted class-size profiles of proper colorings that use exactly chi colors.
std::set<MultiplicityVector> feasible_multiplicities(const Graph& g);
std::set<MultiplicityVector> feasible_multiplicities(const Graph& g, int chi);

}  // namespace villainy
