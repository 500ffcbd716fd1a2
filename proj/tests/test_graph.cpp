#include <algorithm>

#include "cehf/graph.hpp"
#include "cehf/rng.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cehf;

TEST_SUITE("graph_core") {

TEST_CASE("parse C5") {
  const Graph g = parse_graph("p 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n");
  CHECK(g.n() == 5);
  CHECK(g.m() == 5);
  CHECK(g == make_hole(5));
}

TEST_CASE("parse single vertex") {
  const Graph g = parse_graph("p 1 0\n");
  CHECK(g.n() == 1);
  CHECK(g.m() == 0);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.line());
    }
    return -1L;
  };
  CHECK(line_of("p 1 1\ne 1 1\n") == 2);
  CHECK(line_of("c hello\np 3 1\ne 1 4\n") == 3);
  CHECK(line_of("p 3 2\ne 1 2\ne 2 1\n") == 3);
  CHECK(line_of("e 1 2\n") == 1);
  CHECK(line_of("p x 1\n") == 1);
  CHECK(line_of("p 3 2\ne 1 2\n") == 0);
  CHECK(line_of("p 3 1\ne 1 2\nw 2 -4\n") == 3);
  CHECK(line_of("p 3 1\np 3 1\n") == 2);
}

TEST_CASE("round trip and canonical form") {
  const std::string messy = "c comment\np 4 3\ne 3 4\nw 2 7\ne 2 1\ne 1 3\n";
  const Graph g = parse_graph(messy);
  const std::string canon = serialize(g);
  CHECK(canon == "p 4 3\ne 1 2\ne 1 3\ne 3 4\nw 2 7\n");
  CHECK(parse_graph(canon) == g);
  CHECK(serialize(parse_graph(canon)) == canon);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph r = make_gnp(12, 0.35, seed);
    CHECK(parse_graph(serialize(r)) == r);
  }
}

TEST_CASE("named constructions") {
  CHECK(make_hole(5).m() == 5);
  const Graph cube = make_cube();
  CHECK(cube.n() == 8);
  CHECK(cube.m() == 12);
  for (Vertex v = 0; v < 8; ++v) CHECK(cube.degree(v) == 3);

  // Degrees counted directly from the adjacency list of the fixture.
  const Graph h = make_hajos();
  CHECK(h.n() == 7);
  CHECK(h.m() == 11);
  std::vector<int> deg;
  for (Vertex v = 0; v < 7; ++v) deg.push_back(h.degree(v));
  std::sort(deg.rbegin(), deg.rend());
  CHECK(deg == std::vector<int>{4, 3, 3, 3, 3, 3, 3});

  CHECK(construct_named("hole 6") == make_hole(6));
  CHECK(construct_named("complete 4") == make_complete(4));
  CHECK(construct_named("gnp 10 0.5 3") == make_gnp(10, 0.5, 3));
  CHECK_THROWS_AS(construct_named("hole 2"), std::invalid_argument);
  CHECK_THROWS_AS(construct_named("gnp 5 1.5 1"), std::invalid_argument);
  CHECK_THROWS_AS(construct_named("petersen"), std::invalid_argument);
  CHECK(construct_named("house") == fx::house());
  CHECK(construct_named("wheel 5") == fx::wheel(5));
  CHECK(construct_named("k23") == fx::k23());
  CHECK(construct_named("prism") == fx::prism());
  CHECK(construct_named("gk 1") == fx::blown_c5());
  CHECK(construct_named("gk 2").n() == 20);
  CHECK_THROWS_AS(construct_named("gk 0"), std::invalid_argument);
}

TEST_CASE("gnp is reproducible") {
  CHECK(serialize(make_gnp(30, 0.3, 99)) == serialize(make_gnp(30, 0.3, 99)));
  CHECK(make_gnp(20, 0.0, 1).m() == 0);
  CHECK(make_gnp(20, 1.0, 1).m() == 190);
}

TEST_CASE("blow_up") {
  const Graph g = fx::blown_c5();
  CHECK(g.n() == 10);
  CHECK(g.m() == 25);
  const std::vector<int> ones(5, 1);
  CHECK(blow_up(make_hole(5), ones) == make_hole(5));
  const std::vector<int> bad{1, 0, 1, 1, 1};
  CHECK_THROWS_AS(blow_up(make_hole(5), bad), std::invalid_argument);
}

TEST_CASE("blow_up contracts back to the input") {
  Rng rng(5);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Graph base = make_gnp(8, 0.4, seed);
    std::vector<int> sizes;
    for (int v = 0; v < base.n(); ++v) sizes.push_back(static_cast<int>(rng.uniform_int(1, 3)));
    const Graph big = blow_up(base, sizes);
    std::vector<int> block;
    for (int v = 0; v < base.n(); ++v) block.insert(block.end(), static_cast<std::size_t>(sizes[static_cast<std::size_t>(v)]), v);
    GraphBuilder b(base.n());
    for (auto [u, v] : big.edges())
      if (block[static_cast<std::size_t>(u)] != block[static_cast<std::size_t>(v)])
        b.add_edge(block[static_cast<std::size_t>(u)], block[static_cast<std::size_t>(v)]);
      else
        CHECK(big.adjacent(u, v));
    CHECK(std::move(b).build() == base);
  }
}

TEST_CASE("add_universal_clique") {
  const Graph w = add_universal_clique(make_hole(5), 1);
  CHECK(w.n() == 6);
  CHECK(w.degree(5) == 5);
  CHECK(add_universal_clique(make_hole(5), 0) == make_hole(5));
  CHECK(add_universal_clique(make_complete(3), 2) == make_complete(5));
}

TEST_CASE("induced_subgraph") {
  CHECK(induced_subgraph(make_hole(5), std::vector<Vertex>{}).graph.n() == 0);
  const auto p = induced_subgraph(make_hole(5), std::vector<Vertex>{0, 1, 2, 3});
  CHECK(p.graph == make_path(4));
  CHECK(p.to_parent == VertexSet{0, 1, 2, 3});
  CHECK(induced_subgraph(make_complete(5), std::vector<Vertex>{1, 3, 4}).graph == make_complete(3));
  const Graph wg = make_hole(4).with_weights({5, 6, 7, 8});
  CHECK(induced_subgraph(wg, std::vector<Vertex>{1, 3}).graph.weights() == std::vector<Weight>{6, 8});
  CHECK_THROWS(induced_subgraph(make_hole(4), std::vector<Vertex>{0, 9}));
}

TEST_CASE("representation invariants on generated graphs") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    CHECK(check_representation(make_gnp(25, 0.3, seed)));
    CHECK(check_representation(blow_up(make_gnp(6, 0.5, seed), std::vector<int>(6, 2))));
  }
}

TEST_CASE("components_without") {
  const auto comps = components_without(make_path(4), std::vector<Vertex>{1});
  CHECK(comps == std::vector<VertexSet>{{0}, {2, 3}});
  CHECK(is_connected(make_hole(6)));
  CHECK_FALSE(is_connected(Graph::from_edges(3, std::vector<Edge>{{0, 1}})));
}

}
