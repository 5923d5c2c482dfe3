#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace villainy {

using VertexMask = std::uint64_t;

inline constexpr int kMaxOrder = 64;
inline constexpr int kMaxGraph6Order = 62;
inline constexpr int kMaxCanonicalOrder = 10;
inline constexpr int kMaxEnumerationOrder = 8;

inline int popcount(VertexMask m) { return __builtin_popcountll(m); }
inline int lowest_vertex(VertexMask m) { return __builtin_ctzll(m); }
inline VertexMask bit(int v) { return VertexMask{1} << v; }
inline VertexMask all_vertices(int n) { return n >= 64 ? ~VertexMask{0} : bit(n) - 1; }

/// Simple undirected graph on at most 64 vertices, one neighbor bitmask per
/// vertex. Symmetric, loop-free, and no bits at or above n.
class Graph {
 public:
  explicit Graph(int n);

  int order() const { return static_cast<int>(rows_.size()); }
  VertexMask neighbors(int v) const { return rows_[v]; }
  std::span<const VertexMask> rows() const { return rows_; }

  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const { return popcount(rows_[v]); }
  int edge_count() const;

  /// Induced subgraph on the kept vertices, relabelled in increasing order.
  Graph induced(VertexMask keep) const;
  /// Graph with vertex v renamed to perm[v].
  Graph relabel(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexMask> rows_;
};

// ---------------------------------------------------------------------------
// graph6

enum class Graph6Error {
  kEmpty,
  kOrderOutOfRange,
  kLengthMismatch,
  kNonzeroPadding,
  kBadByte,
};

class Graph6ParseError : public std::runtime_error {
 public:
  Graph6ParseError(Graph6Error kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Graph6Error kind() const { return kind_; }

 private:
  Graph6Error kind_;
};

/// Decodes one graph6 line (short form, 1 <= n <= 62). A trailing newline or
/// carriage return is tolerated.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Reads newline-separated graph6 lines, skipping blanks and '#' comments.
std::vector<Graph> read_graph6_lines(std::string_view contents);

// ---------------------------------------------------------------------------
// named families

struct FamilySpec {
  enum class Kind { kComplete, kPath, kCycle, kStar, kCompleteBipartite, kEmpty, kUnion };
  Kind kind = Kind::kEmpty;
  std::vector<int> sizes;
  std::vector<FamilySpec> parts;

  static FamilySpec complete(int n) { return {Kind::kComplete, {n}, {}}; }
  static FamilySpec path(int n) { return {Kind::kPath, {n}, {}}; }
  static FamilySpec cycle(int n) { return {Kind::kCycle, {n}, {}}; }
  static FamilySpec star(int t) { return {Kind::kStar, {t}, {}}; }
  static FamilySpec complete_bipartite(int a, int b) { return {Kind::kCompleteBipartite, {a, b}, {}}; }
  static FamilySpec empty(int r) { return {Kind::kEmpty, {r}, {}}; }
  static FamilySpec disjoint_union(std::vector<FamilySpec> parts) {
    return {Kind::kUnion, {}, std::move(parts)};
  }
};

/// Parses expressions like "disjoint_union(complete(3), path(2))".
/// Throws std::invalid_argument on malformed input.
FamilySpec parse_family(std::string_view text);

/// Vertices are numbered block by block in expression order. Throws
/// std::invalid_argument on a zero size or a total order above 64.
Graph build_family(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// canonical forms and enumeration

/// graph6 text of the relabelling whose upper-triangle bit string (column
/// order) is lexicographically smallest. Equal iff isomorphic.
using CanonicalForm = std::string;

class OrderTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws OrderTooLarge above kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);
/// The relabelled graph whose graph6 text is canonical_form(g).
Graph canonical_graph(const Graph& g);

using GraphFilter = std::function<bool(const Graph&)>;

/// One canonically labelled representative per isomorphism class, sorted by
/// canonical form. Uses OpenMP across extension candidates.
std::vector<Graph> enumerate_nonisomorphic(int n, const GraphFilter& keep = {});
/// Single-threaded reference for enumerate_nonisomorphic.
std::vector<Graph> enumerate_nonisomorphic_serial(int n, const GraphFilter& keep = {});

// ---------------------------------------------------------------------------
// structure

struct Bipartition {
  VertexMask first = 0;   // the smaller side
  VertexMask second = 0;
};

struct StructureReport {
  std::vector<VertexMask> components;  // ordered by lowest vertex
  std::optional<Bipartition> bipartition;
  std::vector<int> degrees;            // indexed by vertex
  int isolated = 0;
  int matching_size = 0;

  bool connected() const { return components.size() == 1; }
  bool bipartite() const { return bipartition.has_value(); }
};

StructureReport analyze_structure(const Graph& g);

/// Maximum matching size (Edmonds' blossom algorithm).
int maximum_matching(const Graph& g);

bool is_complete(const Graph& g);
bool has_triangle(const Graph& g);

}  // namespace villainy
