#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "villainy/graph.hpp"

using namespace villainy;

namespace {

Graph family(const char* expr) { return build_family(parse_family(expr)); }

Graph6Error parse_error_kind(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const Graph6ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error for '" << std::string(text) << "'");
  return Graph6Error::kEmpty;
}

}  // namespace

TEST_CASE("graph6 decodes small graphs") {
  Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.has_edge(0, 1));

  Graph empty2 = parse_graph6("A?");
  CHECK(empty2.order() == 2);
  CHECK(empty2.edge_count() == 0);

  CHECK(parse_graph6("Bw") == family("complete(3)"));
  CHECK(parse_graph6("Bw\n") == family("complete(3)"));

  Graph petersen = parse_graph6("IheA@GUAo");
  CHECK(petersen.order() == 10);
  CHECK(petersen.edge_count() == 15);
  for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
}

TEST_CASE("graph6 encodes") {
  CHECK(emit_graph6(family("complete(2)")) == "A_");
  CHECK(emit_graph6(Graph(1)) == "@");
  CHECK(emit_graph6(family("cycle(6)")) == "EhEG");
  CHECK_THROWS_AS(emit_graph6(Graph(63)), std::invalid_argument);
}

TEST_CASE("graph6 parse errors are distinct") {
  CHECK(parse_error_kind("") == Graph6Error::kEmpty);
  CHECK(parse_error_kind("\n") == Graph6Error::kEmpty);
  CHECK(parse_error_kind("?") == Graph6Error::kOrderOutOfRange);   // n = 0
  CHECK(parse_error_kind("~??") == Graph6Error::kOrderOutOfRange); // long form
  CHECK(parse_error_kind("A") == Graph6Error::kLengthMismatch);
  CHECK(parse_error_kind("A__") == Graph6Error::kLengthMismatch);
  CHECK(parse_error_kind("A`") == Graph6Error::kNonzeroPadding);
  CHECK(parse_error_kind("A ") == Graph6Error::kBadByte);
  CHECK(parse_error_kind("A\x7f") == Graph6Error::kBadByte);
}

TEST_CASE("graph6 file reader skips comments and blanks") {
  auto graphs = read_graph6_lines("# header\nA_\n\nBw\r\n# trailing\n");
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[0].edge_count() == 1);
  CHECK(graphs[1].edge_count() == 3);
}

TEST_CASE("graph6 round trip over every graph with n <= 6") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      CHECK(parse_graph6(emit_graph6(g)) == g);
      Graph h = oracle::random_relabel(g, rng);
      CHECK(parse_graph6(emit_graph6(h)) == h);
    }
  }
}

TEST_CASE("family construction") {
  Graph c5 = family("cycle(5)");
  CHECK(c5.order() == 5);
  CHECK(c5.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  Graph k3k2 = family("disjoint_union(complete(3), complete(2))");
  CHECK(k3k2.order() == 5);
  CHECK(k3k2.edge_count() == 4);
  CHECK(k3k2.has_edge(3, 4));

  Graph star = family("star(4)");
  CHECK(star.order() == 5);
  CHECK(star.degree(0) == 4);
  for (int v = 1; v < 5; ++v) CHECK(star.degree(v) == 1);

  Graph kb = family("complete_bipartite(2, 3)");
  CHECK(kb.edge_count() == 6);
  CHECK(family("empty(4)").edge_count() == 0);
  CHECK(family("path(4)").edge_count() == 3);

  CHECK_THROWS_AS(family("complete(0)"), std::invalid_argument);
  CHECK_THROWS_AS(family("cycle(2)"), std::invalid_argument);
  CHECK_THROWS_AS(family("disjoint_union(complete(40), complete(30))"), std::invalid_argument);
  CHECK_THROWS_AS(family("wheel(5)"), std::invalid_argument);
  CHECK_THROWS_AS(family("cycle(5"), std::invalid_argument);
  CHECK_THROWS_AS(family("cycle(5) x"), std::invalid_argument);
  CHECK(family("disjoint_union(complete(32), complete(32))").order() == 64);
}

TEST_CASE("graph invariants") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::out_of_range);
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  Graph big = family("complete(64)");
  CHECK(big.edge_count() == 64 * 63 / 2);
  CHECK(big.neighbors(63) == (all_vertices(63)));
}

TEST_CASE("canonical form examples") {
  Graph p3a = family("path(3)");
  Graph p3b(3);
  p3b.add_edge(0, 2);
  p3b.add_edge(2, 1);
  CHECK(canonical_form(p3a) == canonical_form(p3b));
  CHECK(canonical_form(family("complete(3)")) != canonical_form(p3a));

  Graph c4a = family("cycle(4)");
  Graph c4b(4);
  c4b.add_edge(0, 2);
  c4b.add_edge(2, 1);
  c4b.add_edge(1, 3);
  c4b.add_edge(3, 0);
  CHECK(canonical_form(c4a) == canonical_form(c4b));
  CHECK_THROWS_AS(canonical_form(Graph(11)), OrderTooLarge);
}

TEST_CASE("canonical form matches the all-permutations minimum") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 7;
    Graph g = oracle::random_graph(n, 0.45, rng);
    Graph c = canonical_graph(g);
    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(oracle::triangle_bits(c, identity) == oracle::min_bits_all_perms(g));
  }
}

TEST_CASE("canonical form is stable under relabelling") {
  std::mt19937 rng(3);
  std::vector<Graph> graphs = {family("cycle(6)"), family("complete_bipartite(3, 4)"), parse_graph6("IheA@GUAo"),
                               family("disjoint_union(complete(3), path(4), empty(2))")};
  for (int i = 0; i < 10; ++i) graphs.push_back(oracle::random_graph(8, 0.5, rng));
  for (const Graph& g : graphs) {
    CanonicalForm base = canonical_form(g);
    for (int r = 0; r < 50; ++r) CHECK(canonical_form(oracle::random_relabel(g, rng)) == base);
  }
}

TEST_CASE("enumeration counts") {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) CHECK(enumerate_nonisomorphic(n).size() == expected[n - 1]);

  auto n3 = enumerate_nonisomorphic(3);
  std::vector<int> edges;
  for (const Graph& g : n3) edges.push_back(g.edge_count());
  std::sort(edges.begin(), edges.end());
  CHECK(edges == std::vector<int>{0, 1, 2, 3});

  CHECK_THROWS_AS(enumerate_nonisomorphic(9), OrderTooLarge);
  CHECK_THROWS_AS(enumerate_nonisomorphic(0), std::invalid_argument);
}

TEST_CASE("enumeration agrees with labelled-graph filtering for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(enumerate_nonisomorphic(n).size() == oracle::count_classes_by_filtering(n));
  }
  CHECK(oracle::count_classes_by_filtering(5) == 34);
}

TEST_CASE("enumeration at n = 7 matches the graph atlas") {
  std::ifstream in(VILLAINY_TEST_DATA "/atlas_n7.g6");
  std::stringstream ss;
  ss << in.rdbuf();
  std::set<CanonicalForm> atlas;
  for (const Graph& g : read_graph6_lines(ss.str())) atlas.insert(canonical_form(g));
  CHECK(atlas.size() == 1044);

  auto ours = enumerate_nonisomorphic(7);
  CHECK(ours.size() == 1044);
  std::set<CanonicalForm> mine;
  for (const Graph& g : ours) mine.insert(emit_graph6(g));
  CHECK(mine == atlas);
}

TEST_CASE("enumeration is sorted, canonical, and matches the serial reference") {
  auto par = enumerate_nonisomorphic(6);
  auto ser = enumerate_nonisomorphic_serial(6);
  CHECK(par == ser);
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(emit_graph6(par[i]) == canonical_form(par[i]));
    if (i > 0) CHECK(emit_graph6(par[i - 1]) < emit_graph6(par[i]));
  }
  auto connected = enumerate_nonisomorphic(5, [](const Graph& g) { return analyze_structure(g).connected(); });
  CHECK(connected.size() == 21);
}

TEST_CASE("structure report") {
  auto s = analyze_structure(family("disjoint_union(complete(3), complete(2))"));
  REQUIRE(s.components.size() == 2);
  CHECK(popcount(s.components[0]) == 3);
  CHECK(popcount(s.components[1]) == 2);
  CHECK_FALSE(s.bipartite());

  auto c6 = analyze_structure(family("cycle(6)"));
  CHECK(c6.connected());
  REQUIRE(c6.bipartite());
  CHECK(popcount(c6.bipartition->first) == 3);
  CHECK(popcount(c6.bipartition->second) == 3);
  CHECK(c6.bipartition->first == 0b010101);
  CHECK(c6.matching_size == 3);

  auto forest = analyze_structure(family("disjoint_union(path(3), empty(2))"));
  CHECK(forest.components.size() == 3);
  CHECK(forest.isolated == 2);
  REQUIRE(forest.bipartite());
  CHECK(forest.bipartition->first == bit(1));
  CHECK(popcount(forest.bipartition->second) == 4);
  CHECK(forest.degrees == std::vector<int>{1, 2, 1, 0, 0});
}

TEST_CASE("bipartitions properly 2-color") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_nonisomorphic(n)) {
      auto s = analyze_structure(g);
      CHECK(s.bipartite() == (oracle::naive_proper_count(g, 2) > 0));
      if (!s.bipartite()) continue;
      CHECK((s.bipartition->first | s.bipartition->second) == all_vertices(n));
      CHECK((s.bipartition->first & s.bipartition->second) == 0);
      CHECK(popcount(s.bipartition->first) <= popcount(s.bipartition->second));
      for (int v = 0; v < n; ++v) {
        VertexMask side = (s.bipartition->first >> v) & 1U ? s.bipartition->first : s.bipartition->second;
        CHECK((g.neighbors(v) & side) == 0);
      }
    }
  }
}

TEST_CASE("matching sizes") {
  for (int k = 2; k <= 32; ++k) CHECK(maximum_matching(build_family(FamilySpec::cycle(2 * k))) == k);
  for (int n = 1; n <= 64; ++n) CHECK(maximum_matching(build_family(FamilySpec::complete(n))) == n / 2);
  CHECK(maximum_matching(parse_graph6("IheA@GUAo")) == 5);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(2 + trial % 11, 0.3, rng);
    CHECK(maximum_matching(g) == oracle::naive_matching(g, all_vertices(g.order())));
  }
}

TEST_CASE("small predicates") {
  CHECK(is_complete(Graph(1)));
  CHECK(is_complete(family("complete(5)")));
  CHECK_FALSE(is_complete(family("cycle(4)")));
  CHECK(has_triangle(family("complete(3)")));
  CHECK_FALSE(has_triangle(family("cycle(5)")));
  Graph g = family("complete(4)");
  CHECK(g.induced(0b0111) == family("complete(3)"));
}
