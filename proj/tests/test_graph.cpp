#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "zfpoly/errors.hpp"
#include "zfpoly/graph.hpp"
#include "zfpoly/threshold.hpp"

using namespace zfp;

TEST_CASE("vertex sets behave like ordered bitsets") {
  VertexSet s{3, 0, 5};
  CHECK(s.size() == 3);
  CHECK(s.front() == 0);
  CHECK(s.to_vector() == std::vector<int>{0, 3, 5});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK((s - VertexSet{0}).to_vector() == std::vector<int>{3, 5});
  CHECK(VertexSet{0, 5}.is_subset_of(s));
  CHECK(lex_less(VertexSet{0, 3}, VertexSet{0, 4}));
  CHECK(lex_less(VertexSet{0, 3}, VertexSet{0, 3, 4}));
  CHECK_FALSE(lex_less(VertexSet{1}, VertexSet{0, 7}));
  CHECK(VertexSet::first(64).size() == 64);
}

TEST_CASE("family builders have the expected shape") {
  CHECK(path(5).edge_count() == 4);
  CHECK(cycle(6).edge_count() == 6);
  CHECK(complete(5).edge_count() == 10);
  CHECK(empty_graph(4).edge_count() == 0);
  CHECK(star(5).degree(0) == 4);

  const Graph w = wheel(6);
  CHECK(w.order() == 6);
  CHECK(w.edge_count() == 10);
  CHECK(w.degree(5) == 5);
  for (int v = 0; v < 5; ++v) CHECK(w.degree(v) == 3);

  const std::vector<int> parts{2, 3};
  const Graph k23 = complete_multipartite(parts);
  CHECK(k23.edge_count() == 6);
  CHECK_FALSE(k23.has_edge(0, 1));
  CHECK(k23.has_edge(1, 2));
  CHECK_FALSE(k23.has_edge(2, 4));

  const Graph chord = cycle_plus_chord(6, 0, 3);
  CHECK(chord.edge_count() == 7);
  CHECK(chord.has_edge(0, 3));
  CHECK_THROWS_AS(cycle_plus_chord(6, 0, 1), PreconditionError);
  CHECK_THROWS_AS(cycle(2), PreconditionError);
  CHECK_THROWS_AS(wheel(3), PreconditionError);
}

TEST_CASE("construction rejects malformed adjacency") {
  CHECK_THROWS_AS(from_edge_list(3, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(from_edge_list(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(from_edge_list(65, {}), SizeCapError);
  // duplicate edges collapse
  CHECK(from_edge_list(3, {{0, 1}, {1, 0}}).edge_count() == 1);
}

TEST_CASE("graph operations") {
  const Graph u = disjoint_union(path(2), path(3));
  CHECK(u.order() == 5);
  CHECK(u.has_edge(2, 3));
  CHECK_FALSE(u.has_edge(1, 2));
  CHECK(connected_components(u) == std::vector<VertexSet>{VertexSet{0, 1}, VertexSet{2, 3, 4}});

  const Graph j = join(empty_graph(2), empty_graph(3));
  const std::vector<int> parts{2, 3};
  CHECK(j == complete_multipartite(parts));

  const Graph grid = cartesian_product(path(2), path(3));
  CHECK(grid.order() == 6);
  CHECK(grid.edge_count() == 7);
  CHECK(is_connected(grid));

  const Graph sub = cycle(5).induced_subgraph(VertexSet{0, 1, 2});
  CHECK(sub == path(3));
}

TEST_CASE("graph6 uses the standard column-major encoding") {
  CHECK(from_graph6("Bg") == path(3));
  CHECK(from_graph6("B_") == disjoint_union(complete(2), complete(1)));
  CHECK(from_graph6("A?") == empty_graph(2));
  CHECK(from_graph6("@") == empty_graph(1));
  CHECK(from_graph6("?") == empty_graph(0));
  CHECK(to_graph6(path(3)) == "Bg");
  CHECK(to_graph6(complete(4)) == "C~");

  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("B"), ParseError);     // truncated
  CHECK_THROWS_AS(from_graph6("Bgg"), ParseError);   // trailing data
  CHECK_THROWS_AS(from_graph6("Bh"), ParseError);    // nonzero padding
  CHECK_THROWS_AS(from_graph6("B\x01"), ParseError);  // byte out of range

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 40);
    const Graph g = support::to_graph(oracle::random_graph(n, 0.3, rng));
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("edge-list text round trips and rejects bad input") {
  const Graph g = parse_edge_list("# a path\n4 3\n0 1\n1 2 # middle\n2 3\n");
  CHECK(g == path(4));
  std::ostringstream out;
  write_edge_list(out, cycle(5));
  CHECK(parse_edge_list(out.str()) == cycle(5));

  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1.5\n"), ParseError);
  CHECK_THROWS(parse_edge_list("3 1\n0 3\n"));
}

TEST_CASE("isomorphism and hamiltonian paths") {
  CHECK(is_isomorphic(cycle_plus_chord(6, 0, 2), cycle_plus_chord(6, 1, 5)));
  CHECK_FALSE(is_isomorphic(cycle_plus_chord(6, 0, 2), cycle_plus_chord(6, 0, 3)));
  CHECK(is_isomorphic(from_graph6("Bg"), from_edge_list(3, {{0, 2}, {2, 1}})));
  CHECK_FALSE(is_isomorphic(path(4), star(4)));
  CHECK_THROWS_AS(is_isomorphic(path(10), path(10)), SizeCapError);

  CHECK(has_hamiltonian_path(path(6)));
  CHECK(has_hamiltonian_path(cycle(7)));
  CHECK_FALSE(has_hamiltonian_path(star(4)));
  CHECK_FALSE(has_hamiltonian_path(disjoint_union(path(2), path(2))));
  CHECK(has_hamiltonian_path(complete(1)));
}

TEST_CASE("labelled corpus enumerates every graph exactly once") {
  for (int n = 0; n <= 5; ++n) {
    std::uint64_t count = 0;
    std::vector<bool> seen(std::uint64_t{1} << pair_count(n), false);
    for (auto it = all_labeled_graphs(n).begin(); it != all_labeled_graphs(n).end(); ++it) {
      const Graph g = *it;
      CHECK(g.edge_count() == __builtin_popcountll(it.code()));
      ++count;
      // the code is the graph6 bit string read as an integer
      CHECK(graph_from_edge_code(n, it.code()) == g);
      seen[it.code()] = true;
    }
    CHECK(count == (std::uint64_t{1} << pair_count(n)));
  }
  CHECK(all_labeled_graphs(7).size() == 2097152);
  CHECK(all_labeled_graphs(4).slice(10, 20).size() == 10);
}

TEST_CASE("threshold strings") {
  const BlockPartition p = block_partition("0110001");
  CHECK(p.block_count() == 4);
  CHECK(p.block(2) == Block{'1', 2});
  CHECK(p.block_start(3) == 3);
  CHECK(p.connected);
  CHECK_FALSE(block_partition("110").connected);
  CHECK_THROWS_AS(block_partition("012"), ParseError);
  CHECK_THROWS_AS(block_partition(""), ParseError);

  // vertex k joins every earlier vertex exactly when its symbol is 1
  const Graph g = threshold_from_string("0101");
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 3));
  CHECK(g.degree(3) == 3);
  CHECK(threshold_from_string("0111") == complete(4));
}
