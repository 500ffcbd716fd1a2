#include <algorithm>
#include <bit>
#include <map>

#include "cehf/oracles.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cehf;

namespace {

// Induced cycles by subset enumeration: G[S] connected and 2-regular.
std::map<int, int> cycle_lengths_by_subsets(const Graph& g) {
  std::map<int, int> out;
  const int n = g.n();
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    const int k = std::popcount(s);
    if (k < 3) continue;
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1u) vs.push_back(v);
    bool ok = true;
    for (Vertex v : vs) {
      int d = 0;
      for (Vertex u : vs) d += g.adjacent(u, v) ? 1 : 0;
      if (d != 2) ok = false;
    }
    if (!ok) continue;
    const auto sub = induced_subgraph(g, vs);
    if (is_connected(sub.graph)) ++out[k];
  }
  return out;
}

std::map<int, int> cycle_lengths(const Graph& g) {
  std::map<int, int> out;
  for (const auto& c : enumerate_chordless_cycles(g)) ++out[static_cast<int>(c.size())];
  return out;
}

bool colorable_by_enumeration(const Graph& g, int q) {
  std::vector<int> c(static_cast<std::size_t>(g.n()), 0);
  for (;;) {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) ok = false;
    if (ok) return true;
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == q) c[i++] = 0;
    if (i == c.size()) return false;
  }
}

}  // namespace

TEST_SUITE("oracles") {

TEST_CASE("chordless cycles of small fixtures") {
  const auto c5 = enumerate_chordless_cycles(make_hole(5));
  REQUIRE(c5.size() == 1);
  CHECK(c5[0] == Cycle{0, 1, 2, 3, 4});
  const auto k4 = enumerate_chordless_cycles(make_complete(4));
  CHECK(k4.size() == 4);
  for (const auto& c : k4) CHECK(c.size() == 3);
}

TEST_CASE("cube chordless cycles") {
  const auto counts = cycle_lengths(make_cube());
  CHECK(counts.at(4) == 6);
  CHECK(counts.at(6) == 4);
  CHECK(counts == cycle_lengths_by_subsets(make_cube()));
}

TEST_CASE("cycle enumeration agrees with subset enumeration") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = make_gnp(10, 0.2 + 0.1 * static_cast<double>(seed % 5), seed);
    CHECK(cycle_lengths(g) == cycle_lengths_by_subsets(g));
  }
}

TEST_CASE("cycles are canonical") {
  for (const auto& c : enumerate_chordless_cycles(make_gnp(11, 0.35, 4))) {
    CHECK(c[0] == *std::min_element(c.begin(), c.end()));
    CHECK(c[1] < c.back());
  }
  CHECK(enumerate_chordless_cycles(make_hole(7), 6).empty());
}

TEST_CASE("signings") {
  auto s = odd_signable_signing(make_hole(4));
  REQUIRE(s);
  CHECK(verify_signing(make_hole(4), *s));
  CHECK_FALSE(odd_signable_signing(fx::wheel(4)));
  CHECK_FALSE(odd_signable_signing(fx::k23()));
  CHECK_FALSE(odd_signable_signing(fx::prism()));
  CHECK(odd_signable_signing(make_hole(5)));
  CHECK(odd_signable_signing(fx::blown_c5()));
}

TEST_CASE("forbidden structures") {
  auto eh = find_forbidden_induced(make_hole(6), ForbiddenKind::EvenHole);
  REQUIRE(eh);
  CHECK(eh->vertices.size() == 6);
  CHECK_FALSE(find_forbidden_induced(make_hole(5), ForbiddenKind::EvenHole));

  auto cap = find_forbidden_induced(fx::house(), ForbiddenKind::Cap);
  REQUIRE(cap);
  CHECK(check_witness(fx::house(), *cap));

  CHECK_FALSE(find_forbidden_induced(fx::c6_hub({0, 2, 4}), ForbiddenKind::EvenWheel));
  auto ew = find_forbidden_induced(fx::c6_hub({0, 1, 3, 4}), ForbiddenKind::EvenWheel);
  REQUIRE(ew);
  CHECK(check_witness(fx::c6_hub({0, 1, 3, 4}), *ew));

  auto th = find_forbidden_induced(fx::k23(), ForbiddenKind::Theta);
  REQUIRE(th);
  CHECK(check_witness(fx::k23(), *th));
  auto pr = find_forbidden_induced(fx::prism(), ForbiddenKind::Prism);
  REQUIRE(pr);
  CHECK(check_witness(fx::prism(), *pr));
  CHECK_FALSE(find_forbidden_induced(fx::k23(), ForbiddenKind::Prism));
  CHECK_FALSE(find_forbidden_induced(fx::prism(), ForbiddenKind::Theta));

  auto tri = find_forbidden_induced(make_complete(3), ForbiddenKind::Triangle);
  REQUIRE(tri);
  CHECK(tri->vertices == std::vector<Vertex>{0, 1, 2});
  CHECK_THROWS_AS(parse_forbidden_kind("pentagon"), std::invalid_argument);
}

TEST_CASE("longer thetas and prisms") {
  // Theta with paths of lengths 2, 3, 4 between 0 and 1.
  const Graph theta = fx::edges(8, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 7}, {7, 1}});
  auto t = find_forbidden_induced(theta, ForbiddenKind::Theta);
  REQUIRE(t);
  CHECK(check_witness(theta, *t));
  // Prism with one subdivided rung.
  const Graph prism = fx::edges(7, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 6}, {6, 3}, {1, 4}, {2, 5}});
  auto p = find_forbidden_induced(prism, ForbiddenKind::Prism);
  REQUIRE(p);
  CHECK(check_witness(prism, *p));
}

TEST_CASE("odd-signable iff no even wheel, theta or prism") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const double p = 0.2 + 0.2 * static_cast<double>(seed % 3);
    const Graph g = make_gnp(6 + static_cast<int>(seed % 7), p, seed);
    bool found = false;
    for (auto k : {ForbiddenKind::EvenWheel, ForbiddenKind::Theta, ForbiddenKind::Prism}) {
      auto w = find_forbidden_induced(g, k);
      if (w) {
        CHECK(check_witness(g, *w));
        found = true;
      }
    }
    auto s = odd_signable_signing(g);
    CHECK(found == !s.has_value());
    if (s) CHECK(verify_signing(g, *s));
  }
}

TEST_CASE("witnesses always re-check") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = make_gnp(10, 0.35, seed);
    for (auto k : {ForbiddenKind::EvenHole, ForbiddenKind::FourHole, ForbiddenKind::Cap, ForbiddenKind::EvenWheel,
                   ForbiddenKind::Theta, ForbiddenKind::Prism, ForbiddenKind::Triangle})
      if (auto w = find_forbidden_induced(g, k)) CHECK(check_witness(g, *w));
  }
}

TEST_CASE("brute solvers") {
  CHECK(brute_chromatic(fx::blown_c5()).chi == 5);
  CHECK(brute_max_clique(fx::blown_c5()).size() == 4);
  const Graph p3 = make_path(3).with_weights({1, 3, 1});
  CHECK(brute_mwss(p3).weight == 3);
  CHECK(brute_mwss(make_path(3).with_weights({2, 3, 2})).weight == 4);
  CHECK(brute_chromatic(make_hole(5)).chi == 3);

  // Hajos: no 3-coloring among all 3^7 assignments, a 4-coloring exists.
  CHECK_FALSE(colorable_by_enumeration(make_hajos(), 3));
  CHECK(colorable_by_enumeration(make_hajos(), 4));
  const auto h = brute_chromatic(make_hajos());
  CHECK(h.chi == 4);
  CHECK(is_proper_coloring(make_hajos(), h.coloring));

  CHECK_THROWS_AS(brute_chromatic(make_hole(20)), BudgetExceeded);
  Limits big;
  big.chromatic_max_n = 20;
  CHECK(brute_chromatic(make_hole(20), big).chi == 2);
}

TEST_CASE("chromatic at least clique number, equal on chordal graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = make_gnp(10, 0.4, seed);
    const auto c = brute_chromatic(g);
    CHECK(is_proper_coloring(g, c.coloring));
    CHECK(color_count(c.coloring) == c.chi);
    CHECK(c.chi >= static_cast<int>(brute_max_clique(g).size()));
    const auto s = brute_mwss(g);
    CHECK(g.is_stable(s.set));
  }
  const Graph chordal = fx::edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(brute_chromatic(chordal).chi == static_cast<int>(brute_max_clique(chordal).size()));
}

TEST_CASE("brute clique cutset") {
  CHECK(brute_clique_cutset(fx::diamond()) == VertexSet{1, 2});
  CHECK_FALSE(brute_clique_cutset(make_hole(5)));
  CHECK(brute_clique_cutset(make_path(4)) == VertexSet{1});
  CHECK(brute_clique_cutset(fx::edges(3, {{0, 1}})) == VertexSet{});
  const auto c = brute_solve(make_complete(4), BruteProblem::CliqueCutset);
  CHECK(c.none);
}

TEST_CASE("pairwise twins") {
  CHECK(twin_classes_pairwise(make_complete(4)).size() == 1);
  CHECK(twin_classes_pairwise(make_hole(4)).size() == 4);
  const auto b = twin_classes_pairwise(fx::blown_c5());
  CHECK(b == std::vector<VertexSet>{{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
}

}
