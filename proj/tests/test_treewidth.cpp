#include <algorithm>
#include <bit>

#include "cehf/oracles.hpp"
#include "cehf/treewidth.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cehf;

namespace {

// Treewidth by the subset recurrence TW(S) = min_v max(TW(S - v), |Q(S - v, v)|).
int treewidth_by_subsets(const Graph& g) {
  const int n = g.n();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= 1u << v;
    adj[static_cast<std::size_t>(v)] |= 1u << u;
  }
  auto q = [&](std::uint32_t s, int v) {
    std::uint32_t seen = 1u << v, frontier = 1u << v, reach = 0;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= ~seen;
      seen |= next;
      reach |= next & ~s;
      frontier = next & s;
    }
    return std::popcount(reach);
  };
  std::vector<int> tw(1u << n, 0);
  tw[0] = -1;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int best = n;
    for (std::uint32_t r = s; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      const std::uint32_t t = s & ~(1u << v);
      best = std::min(best, std::max(tw[t], q(t, v)));
    }
    tw[s] = best;
  }
  return std::max(tw[(1u << n) - 1], 0);
}

int clique_number(const Graph& g) { return static_cast<int>(brute_max_clique(g, Limits::uniform(64)).size()); }

Ear make_ear(Cycle host, std::vector<Vertex> path, Vertex y) {
  Ear e;
  e.host = std::move(host);
  e.path = std::move(path);
  e.apex = y;
  return e;
}

// C5 on 0..4 plus the ear 4-5-6-7-1 with apex 0 adjacent to 6.
Graph c5_with_ear() {
  return fx::edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 1}, {0, 6}});
}

}  // namespace

TEST_SUITE("treewidth") {

TEST_CASE("validity checker rejects broken decompositions") {
  const Graph p = make_path(3);
  TreeDecomposition good{{{0, 1}, {1, 2}}, {{0, 1}}};
  CHECK(is_valid_decomposition(p, good));
  CHECK_FALSE(is_valid_decomposition(p, TreeDecomposition{{{0, 1}, {2}}, {{0, 1}}}));
  CHECK_FALSE(is_valid_decomposition(p, TreeDecomposition{{{0, 1}, {1, 2}, {0}}, {{0, 1}, {1, 2}}}));
  CHECK_FALSE(is_valid_decomposition(p, TreeDecomposition{{{0, 1}, {1, 2}}, {}}));
  CHECK(good.width() == 1);
}

TEST_CASE("heuristic decompositions are valid and exact search is exact") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = make_gnp(4 + static_cast<int>(seed % 7), 0.2 + 0.1 * static_cast<double>(seed % 5), seed);
    const auto td = heuristic_tree_decomposition(g);
    CHECK(is_valid_decomposition(g, td));
    const int tw = treewidth_by_subsets(g);
    CHECK(td.width() >= tw);
    auto within = exact_ordering_within(g, tw);
    REQUIRE(within);
    const auto etd = decomposition_from_ordering(g, *within);
    CHECK(is_valid_decomposition(g, etd));
    CHECK(etd.width() <= tw);
    if (tw > 0) CHECK_FALSE(exact_ordering_within(g, tw - 1));
  }
}

TEST_CASE("skeleton decompositions") {
  auto c5 = skeleton_tree_decomposition(make_hole(5));
  REQUIRE(c5.status == SkeletonTreewidth::Status::Ok);
  CHECK(c5.td.width() == 2);
  auto cube = skeleton_tree_decomposition(make_cube());
  REQUIRE(cube.status == SkeletonTreewidth::Status::Ok);
  CHECK(cube.td.width() <= 4);
  CHECK(is_valid_decomposition(make_cube(), cube.td));
  auto tri = skeleton_tree_decomposition(make_complete(3));
  CHECK(tri.status == SkeletonTreewidth::Status::Rejected);
  CHECK(tri.triangle.has_value());

  // The 7x7 grid is triangle-free with treewidth 7.
  GraphBuilder b(49);
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) {
      if (c + 1 < 7) b.add_edge(r * 7 + c, r * 7 + c + 1);
      if (r + 1 < 7) b.add_edge(r * 7 + c, (r + 1) * 7 + c);
    }
  const Graph grid = std::move(b).build();
  Limits small;
  small.exact_tw_nodes = 50;
  CHECK(skeleton_tree_decomposition(grid, small).status == SkeletonTreewidth::Status::Undecided);
}

TEST_CASE("chordality") {
  CHECK(is_chordal(make_complete(5)));
  CHECK(is_chordal(make_path(6)));
  CHECK_FALSE(is_chordal(make_hole(4)));
  CHECK_FALSE(is_chordal(make_hole(7)));
  CHECK(is_chordal(fx::diamond()));
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = make_gnp(9, 0.4, seed);
    const bool no_holes = enumerate_holes(g).empty();
    CHECK(is_chordal(g) == no_holes);
    if (no_holes) {
      const auto ct = clique_tree(g);
      CHECK(is_valid_decomposition(g, ct));
      CHECK(ct.width() + 1 == clique_number(g));
      for (const auto& bag : ct.bags) CHECK(g.is_clique(bag));
    }
  }
}

TEST_CASE("triangulation from ears") {
  EarSequence c7{{0, 1, 2, 3, 4, 5, 6}, {}};
  const Graph t7 = triangulation_from_ears(make_hole(7), c7);
  CHECK(is_chordal(t7));
  CHECK(clique_number(t7) <= 5);

  EarSequence c5{{0, 1, 2, 3, 4}, {}};
  const Graph t5 = triangulation_from_ears(make_hole(5), c5);
  CHECK(is_chordal(t5));
  CHECK(clique_number(t5) == 4);

  EarSequence one{{0, 1, 2, 3, 4}, {make_ear({0, 1, 2, 3, 4}, {4, 5, 6, 7, 1}, 0)}};
  const Graph g = c5_with_ear();
  REQUIRE(validate_ear_sequence(g, one).status == EarStatus::Good);
  const Graph t = triangulation_from_ears(g, one);
  CHECK(is_chordal(t));
  CHECK(clique_number(t) <= 6);
  for (auto [u, v] : g.edges()) CHECK(t.adjacent(u, v));
  CHECK(clique_tree(t).width() <= 5);
  CHECK(is_valid_decomposition(g, clique_tree(t)));

  // Apex with an even number of neighbours on the ear.
  const Graph even = fx::edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 1}});
  CHECK_THROWS_AS(triangulation_from_ears(even, one), std::invalid_argument);
}

TEST_CASE("good ear validation") {
  const Graph g = c5_with_ear();
  auto check = [&](const Graph& h, std::vector<Vertex> path, Vertex y) {
    return validate_good_ear(h, 5, make_ear({0, 1, 2, 3, 4}, std::move(path), y));
  };
  CHECK(check(g, {4, 5, 6, 7, 1}, 0).status == EarStatus::Good);
  const Graph even = fx::edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 1}});
  CHECK(check(even, {4, 5, 6, 7, 1}, 0).status == EarStatus::NotGood);
  // One interior vertex adjacent to y.
  const Graph short_ear = fx::edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {4, 5}, {5, 1}, {0, 5}});
  CHECK(validate_good_ear(short_ear, 5, make_ear({0, 1, 2, 3, 4}, {4, 5, 1}, 0)).status == EarStatus::Good);
  // Wrong apex, chorded path, interior touching the host elsewhere.
  CHECK(check(g, {4, 5, 6, 7, 1}, 2).status == EarStatus::NotAnEar);
  const Graph touching = fx::edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 1}, {0, 6}, {2, 6}});
  CHECK(check(touching, {4, 5, 6, 7, 1}, 0).status == EarStatus::NotAnEar);
  CHECK(check(g, {4, 6, 5, 7, 1}, 0).status == EarStatus::NotAnEar);
}

TEST_CASE("lifting") {
  const auto td = skeleton_tree_decomposition(make_hole(5)).td;
  const Graph blown = fx::blown_c5();
  const auto sd = std::get<SkeletonDecomposition>(extract_skeleton(blown));
  const auto lifted = lift_tree_decomposition(td, sd);
  CHECK(is_valid_decomposition(blown, lifted));
  CHECK(lifted.width() <= 5);

  const Graph w = fx::wheel(5);
  const auto wsd = std::get<SkeletonDecomposition>(extract_skeleton(w));
  const auto wl = lift_tree_decomposition(td, wsd);
  CHECK(is_valid_decomposition(w, wl));
  CHECK(wl.width() == td.width() + 1);

  const auto c7 = std::get<SkeletonDecomposition>(extract_skeleton(make_hole(7)));
  const auto t7 = skeleton_tree_decomposition(make_hole(7)).td;
  CHECK(lift_tree_decomposition(t7, c7).bags == t7.bags);
  CHECK_THROWS_AS(lift_tree_decomposition(t7, wsd), std::invalid_argument);
}

TEST_CASE("nice decompositions") {
  const Graph k3 = make_complete(3);
  const auto nk = nice_decomposition(k3, TreeDecomposition{{{0, 1, 2}}, {}});
  CHECK(nk.width() == 2);
  int leaves = 0, joins = 0;
  for (const auto& nd : nk.nodes) {
    leaves += nd.kind == NiceNode::Kind::Leaf;
    joins += nd.kind == NiceNode::Kind::Join;
  }
  CHECK(leaves == 1);
  CHECK(joins == 0);
  CHECK(nk.nodes[static_cast<std::size_t>(nk.root)].bag.empty());

  const Graph p4 = make_path(4);
  const auto np = nice_decomposition(p4, TreeDecomposition{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}});
  CHECK(np.width() == 1);
  CHECK(is_valid_decomposition(p4, np.as_tree_decomposition()));

  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = make_gnp(12, 0.3, seed);
    const auto td = heuristic_tree_decomposition(g);
    const auto nice = nice_decomposition(g, td);
    CHECK(nice.width() == td.width());
    CHECK(is_valid_decomposition(g, nice.as_tree_decomposition()));
    for (std::size_t i = 0; i < nice.nodes.size(); ++i) {
      const auto& nd = nice.nodes[i];
      for (int c : nd.children) CHECK(static_cast<std::size_t>(c) < i);
      switch (nd.kind) {
        case NiceNode::Kind::Leaf: CHECK(nd.bag.empty()); break;
        case NiceNode::Kind::Join:
          REQUIRE(nd.children.size() == 2);
          CHECK(nice.nodes[static_cast<std::size_t>(nd.children[0])].bag == nd.bag);
          CHECK(nice.nodes[static_cast<std::size_t>(nd.children[1])].bag == nd.bag);
          break;
        default: {
          REQUIRE(nd.children.size() == 1);
          const auto& cb = nice.nodes[static_cast<std::size_t>(nd.children[0])].bag;
          CHECK(cb.size() + (nd.kind == NiceNode::Kind::Introduce ? 1 : 0) == nd.bag.size() + (nd.kind == NiceNode::Kind::Forget ? 1 : 0));
        }
      }
    }
    CHECK(nice.nodes.size() <= static_cast<std::size_t>((td.width() + 2) * 3 * std::max(g.n(), 1)));
  }
}

TEST_CASE("restriction keeps validity") {
  const Graph g = make_gnp(12, 0.35, 77);
  const auto td = heuristic_tree_decomposition(g);
  const VertexSet keep{0, 2, 3, 5, 8, 9, 11};
  const auto r = restrict_decomposition(td, keep, g.n());
  CHECK(is_valid_decomposition(induced_subgraph(g, keep).graph, r));
  CHECK(r.width() <= td.width());
}

}
