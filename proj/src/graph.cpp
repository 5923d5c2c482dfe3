#include "villainy/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace villainy {

Graph::Graph(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw std::invalid_argument("graph order must be in 1..64, got " + std::to_string(n));
  }
  rows_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u < 0 || v < 0 || u >= order() || v >= order()) throw std::out_of_range("vertex out of range");
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexMask r : rows_) twice += popcount(r);
  return twice / 2;
}

Graph Graph::induced(VertexMask keep) const {
  std::vector<int> index(rows_.size(), -1);
  int m = 0;
  for (int v = 0; v < order(); ++v) {
    if ((keep >> v) & 1U) index[v] = m++;
  }
  Graph h(m);
  for (int u = 0; u < order(); ++u) {
    if (index[u] < 0) continue;
    for (VertexMask r = rows_[u] & keep; r != 0; r &= r - 1) {
      int v = lowest_vertex(r);
      if (u < v) h.add_edge(index[u], index[v]);
    }
  }
  return h;
}

Graph Graph::relabel(std::span<const int> perm) const {
  Graph h(order());
  for (int u = 0; u < order(); ++u) {
    for (VertexMask r = rows_[u]; r != 0; r &= r - 1) {
      int v = lowest_vertex(r);
      if (u < v) h.add_edge(perm[u], perm[v]);
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr int kBias = 63;

std::size_t payload_bytes(int n) {
  std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6ParseError(Graph6Error::kEmpty, "graph6: empty input");

  for (char ch : text) {
    auto b = static_cast<unsigned char>(ch);
    if (b < 63 || b > 126) {
      throw Graph6ParseError(Graph6Error::kBadByte,
                             "graph6: byte " + std::to_string(b) + " outside 63..126");
    }
  }
  int n = static_cast<unsigned char>(text[0]) - kBias;
  if (n < 1 || n > kMaxGraph6Order) {
    throw Graph6ParseError(Graph6Error::kOrderOutOfRange,
                           "graph6: only short-form graphs with 1..62 vertices are supported");
  }
  std::string_view payload = text.substr(1);
  if (payload.size() != payload_bytes(n)) {
    throw Graph6ParseError(Graph6Error::kLengthMismatch,
                           "graph6: expected " + std::to_string(payload_bytes(n)) +
                               " payload bytes for n=" + std::to_string(n) + ", got " +
                               std::to_string(payload.size()));
  }

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = static_cast<unsigned char>(payload[k / 6]) - kBias;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    int byte = static_cast<unsigned char>(payload.back()) - kBias;
    int pad_mask = (1 << (6 - k % 6)) - 1;
    if (byte & pad_mask) throw Graph6ParseError(Graph6Error::kNonzeroPadding, "graph6: nonzero padding bits");
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  int n = g.order();
  if (n > kMaxGraph6Order) throw std::invalid_argument("graph6: order above 62 needs the long form");
  std::string out(1 + payload_bytes(n), static_cast<char>(kBias));
  out[0] = static_cast<char>(kBias + n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.has_edge(i, j)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
    }
  }
  return out;
}

std::vector<Graph> read_graph6_lines(std::string_view contents) {
  std::vector<Graph> graphs;
  while (!contents.empty()) {
    auto eol = contents.find('\n');
    std::string_view line = contents.substr(0, eol);
    contents = eol == std::string_view::npos ? std::string_view{} : contents.substr(eol + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

// ---------------------------------------------------------------------------
// families

namespace {

class FamilyParser {
 public:
  explicit FamilyParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec spec = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("family expression: " + why + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!consume(ch)) fail(std::string("expected '") + ch + "'");
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a family name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 4) fail("size parameter too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  FamilySpec expr() {
    std::string name = identifier();
    expect('(');
    FamilySpec spec;
    if (name == "disjoint_union") {
      std::vector<FamilySpec> parts;
      parts.push_back(expr());
      while (consume(',')) parts.push_back(expr());
      expect(')');
      return FamilySpec::disjoint_union(std::move(parts));
    }
    if (name == "complete_bipartite") {
      int a = integer();
      expect(',');
      int b = integer();
      expect(')');
      return FamilySpec::complete_bipartite(a, b);
    }
    int size = integer();
    expect(')');
    if (name == "complete") return FamilySpec::complete(size);
    if (name == "path") return FamilySpec::path(size);
    if (name == "cycle") return FamilySpec::cycle(size);
    if (name == "star") return FamilySpec::star(size);
    if (name == "empty") return FamilySpec::empty(size);
    fail("unknown family '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int family_order(const FamilySpec& spec) {
  using K = FamilySpec::Kind;
  for (int s : spec.sizes) {
    if (s < 1) throw std::invalid_argument("family size parameters must be >= 1");
  }
  switch (spec.kind) {
    case K::kComplete:
    case K::kPath:
    case K::kEmpty:
      return spec.sizes.at(0);
    case K::kCycle:
      if (spec.sizes.at(0) < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
      return spec.sizes.at(0);
    case K::kStar:
      return spec.sizes.at(0) + 1;
    case K::kCompleteBipartite:
      return spec.sizes.at(0) + spec.sizes.at(1);
    case K::kUnion: {
      if (spec.parts.empty()) throw std::invalid_argument("disjoint_union needs at least one part");
      long total = 0;
      for (const auto& p : spec.parts) {
        total += family_order(p);
        if (total > kMaxOrder) break;
      }
      return static_cast<int>(std::min<long>(total, kMaxOrder + 1));
    }
  }
  return 0;
}

void place_family(const FamilySpec& spec, Graph& g, int offset) {
  using K = FamilySpec::Kind;
  switch (spec.kind) {
    case K::kComplete: {
      int n = spec.sizes[0];
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(offset + i, offset + j);
      break;
    }
    case K::kPath:
      for (int i = 0; i + 1 < spec.sizes[0]; ++i) g.add_edge(offset + i, offset + i + 1);
      break;
    case K::kCycle: {
      int n = spec.sizes[0];
      for (int i = 0; i < n; ++i) g.add_edge(offset + i, offset + (i + 1) % n);
      break;
    }
    case K::kStar:
      for (int i = 1; i <= spec.sizes[0]; ++i) g.add_edge(offset, offset + i);
      break;
    case K::kCompleteBipartite: {
      int a = spec.sizes[0], b = spec.sizes[1];
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(offset + i, offset + a + j);
      break;
    }
    case K::kEmpty:
      break;
    case K::kUnion:
      for (const auto& p : spec.parts) {
        place_family(p, g, offset);
        offset += family_order(p);
      }
      break;
  }
}

}  // namespace

FamilySpec parse_family(std::string_view text) { return FamilyParser(text).parse(); }

Graph build_family(const FamilySpec& spec) {
  int n = family_order(spec);
  if (n > kMaxOrder) throw std::invalid_argument("family order exceeds 64 vertices");
  Graph g(n);
  place_family(spec, g, 0);
  return g;
}

// ---------------------------------------------------------------------------
// canonical form

namespace {

// Searches relabellings position by position, cutting a branch as soon as
// its column prefix exceeds the best bit string found so far.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {
    perm_.resize(n_);
    cur_.resize(n_);
    best_.resize(n_);
    best_perm_.resize(n_);
    state_.assign(n_ + 1, -1);
  }

  std::vector<int> run() {
    descend(0, 0);
    return best_perm_;
  }

 private:
  void descend(int pos, VertexMask used) {
    if (pos == n_) {
      if (!have_best_ || state_[n_] < 0) {
        best_ = cur_;
        best_perm_ = perm_;
        have_best_ = true;
        std::fill(state_.begin(), state_.end(), 0);
      }
      return;
    }
    VertexMask candidates = all_vertices(n_) & ~used;
    for (; candidates != 0; candidates &= candidates - 1) {
      int v = lowest_vertex(candidates);
      std::uint32_t column = 0;
      VertexMask nbrs = g_.neighbors(v);
      for (int i = 0; i < pos; ++i) column = (column << 1) | static_cast<std::uint32_t>((nbrs >> perm_[i]) & 1U);
      int next_state = -1;
      if (have_best_ && state_[pos] == 0) {
        if (column > best_[pos]) continue;
        next_state = column < best_[pos] ? -1 : 0;
      }
      perm_[pos] = v;
      cur_[pos] = column;
      state_[pos + 1] = next_state;
      descend(pos + 1, used | bit(v));
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> perm_;
  std::vector<std::uint32_t> cur_;
  std::vector<std::uint32_t> best_;
  std::vector<int> best_perm_;
  // state_[p]: comparison of the current prefix [0, p) with best_ (0 equal, -1 smaller)
  std::vector<int> state_;
  bool have_best_ = false;
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw OrderTooLarge("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) +
                        " vertices");
  }
  std::vector<int> position_to_vertex = CanonicalSearch(g).run();
  std::vector<int> label(g.order());
  for (int p = 0; p < g.order(); ++p) label[position_to_vertex[p]] = p;
  return g.relabel(label);
}

CanonicalForm canonical_form(const Graph& g) { return emit_graph6(canonical_graph(g)); }

// ---------------------------------------------------------------------------
// enumeration

namespace {

void check_enumeration_order(int n) {
  if (n < 1) throw std::invalid_argument("enumeration order must be >= 1");
  if (n > kMaxEnumerationOrder) {
    throw OrderTooLarge("enumeration is limited to n <= " + std::to_string(kMaxEnumerationOrder) +
                        "; generate larger graphs externally (e.g. nauty geng) and pass a graph6 file");
  }
}

Graph extend(const Graph& base, VertexMask new_neighbors) {
  Graph h(base.order() + 1);
  for (int u = 0; u < base.order(); ++u) {
    for (VertexMask r = base.neighbors(u); r != 0; r &= r - 1) {
      int v = lowest_vertex(r);
      if (u < v) h.add_edge(u, v);
    }
  }
  for (VertexMask r = new_neighbors; r != 0; r &= r - 1) h.add_edge(base.order(), lowest_vertex(r));
  return h;
}

std::vector<Graph> decode_sorted(const std::vector<CanonicalForm>& forms, const GraphFilter& keep) {
  std::vector<Graph> out;
  out.reserve(forms.size());
  for (const auto& f : forms) {
    Graph g = parse_graph6(f);
    if (!keep || keep(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_nonisomorphic_serial(int n, const GraphFilter& keep) {
  check_enumeration_order(n);
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::set<CanonicalForm> seen;
    for (const Graph& base : level) {
      for (VertexMask nb = 0; nb < bit(m - 1); ++nb) seen.insert(canonical_form(extend(base, nb)));
    }
    level = decode_sorted({seen.begin(), seen.end()}, m == n ? keep : GraphFilter{});
  }
  if (n == 1 && keep && !keep(level.front())) level.clear();
  return level;
}

std::vector<Graph> enumerate_nonisomorphic(int n, const GraphFilter& keep) {
  check_enumeration_order(n);
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    const long per_base = static_cast<long>(bit(m - 1));
    const long total = static_cast<long>(level.size()) * per_base;
    std::vector<CanonicalForm> forms(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 64)
    for (long idx = 0; idx < total; ++idx) {
      const Graph& base = level[static_cast<std::size_t>(idx / per_base)];
      forms[static_cast<std::size_t>(idx)] = canonical_form(extend(base, static_cast<VertexMask>(idx % per_base)));
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    level = decode_sorted(forms, m == n ? keep : GraphFilter{});
  }
  if (n == 1 && keep && !keep(level.front())) level.clear();
  return level;
}

// ---------------------------------------------------------------------------
// structure

bool is_complete(const Graph& g) {
  VertexMask all = all_vertices(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbors(v) != (all & ~bit(v))) return false;
  }
  return true;
}

bool has_triangle(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (VertexMask r = g.neighbors(u) & ~all_vertices(u + 1); r != 0; r &= r - 1) {
      int v = lowest_vertex(r);
      if (g.neighbors(u) & g.neighbors(v)) return true;
    }
  }
  return false;
}

int maximum_matching(const Graph& g) {
  const int n = g.order();
  std::vector<int> match(n, -1), parent(n), base(n);
  std::vector<char> used(n), blossom(n);

  auto lca = [&](int a, int b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };
  auto find_path = [&](int root) -> int {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (VertexMask r = g.neighbors(v); r != 0; r &= r - 1) {
        int to = lowest_vertex(r);
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          q.push(match[to]);
        }
      }
    }
    return -1;
  };

  int size = 0;
  for (int v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    int end = find_path(v);
    if (end == -1) continue;
    ++size;
    while (end != -1) {
      int pv = parent[end];
      int ppv = match[pv];
      match[end] = pv;
      match[pv] = end;
      end = ppv;
    }
  }
  return size;
}

StructureReport analyze_structure(const Graph& g) {
  const int n = g.order();
  StructureReport rep;
  rep.degrees.resize(n);
  for (int v = 0; v < n; ++v) {
    rep.degrees[v] = g.degree(v);
    if (rep.degrees[v] == 0) ++rep.isolated;
  }

  Bipartition parts;
  bool bipartite = true;
  VertexMask unseen = all_vertices(n);
  while (unseen != 0) {
    int root = lowest_vertex(unseen);
    // side_a holds the root, so it is the lexicographically smaller set
    VertexMask side_a = bit(root), side_b = 0, frontier = bit(root), comp = bit(root);
    bool on_a = true;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask r = frontier; r != 0; r &= r - 1) next |= g.neighbors(lowest_vertex(r));
      VertexMask same_side = on_a ? side_a : side_b;
      if (next & same_side) bipartite = false;
      next &= ~comp;
      comp |= next;
      (on_a ? side_b : side_a) |= next;
      on_a = !on_a;
      frontier = next;
    }
    rep.components.push_back(comp);
    unseen &= ~comp;
    if (popcount(side_b) < popcount(side_a)) {
      parts.first |= side_b;
      parts.second |= side_a;
    } else {
      parts.first |= side_a;
      parts.second |= side_b;
    }
  }
  if (bipartite) rep.bipartition = parts;
  rep.matching_size = maximum_matching(g);
  return rep;
}

}  // namespace villainy
