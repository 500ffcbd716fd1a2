#include "cehf/decomposition.hpp"
#include "cehf/oracles.hpp"
#include "cehf/skeleton.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cehf;

TEST_SUITE("twins_skeleton") {

TEST_CASE("twin class examples") {
  CHECK(twin_classes(make_complete(4)) == std::vector<VertexSet>{{0, 1, 2, 3}});
  CHECK(twin_classes(make_hole(4)).size() == 4);
  CHECK(twin_classes(fx::blown_c5()) == twin_classes_pairwise(fx::blown_c5()));
  CHECK(twin_classes(fx::blown_c5()).size() == 5);
  CHECK(twin_classes(Graph::from_edges(0, std::vector<Edge>{})).empty());
}

TEST_CASE("refinement equals pairwise check") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const Graph g = make_gnp(3 + static_cast<int>(seed % 15), 0.1 + 0.15 * static_cast<double>(seed % 6), seed);
    CHECK(twin_classes(g) == twin_classes_pairwise(g));
    const Graph b = blow_up(g, std::vector<int>(static_cast<std::size_t>(g.n()), 1 + static_cast<int>(seed % 3)));
    CHECK(twin_classes(b) == twin_classes_pairwise(b));
  }
}

TEST_CASE("wheel skeleton") {
  const auto r = extract_skeleton(fx::wheel(5));
  REQUIRE(std::holds_alternative<SkeletonDecomposition>(r));
  const auto& sd = std::get<SkeletonDecomposition>(r);
  CHECK(sd.skeleton == make_hole(5));
  CHECK(sd.universal == VertexSet{5});
  for (const auto& k : sd.clique_map) CHECK(k.size() == 1);
  CHECK(clique_number_via_skeleton(sd) == 3);
  CHECK(reconstruct_atom(sd) == fx::wheel(5));
}

TEST_CASE("blown C5 skeleton") {
  const auto r = extract_skeleton(fx::blown_c5());
  REQUIRE(std::holds_alternative<SkeletonDecomposition>(r));
  const auto& sd = std::get<SkeletonDecomposition>(r);
  CHECK(sd.skeleton == make_hole(5));
  CHECK(sd.universal.empty());
  for (const auto& k : sd.clique_map) CHECK(k.size() == 2);
  CHECK(clique_number_via_skeleton(sd) == 4);
  CHECK(reconstruct_atom(sd) == fx::blown_c5());
  CHECK(is_skeleton_of(sd, fx::blown_c5()));
}

TEST_CASE("complete and rejected atoms") {
  CHECK(std::holds_alternative<CompleteAtom>(extract_skeleton(make_complete(6))));
  CHECK(std::holds_alternative<CompleteAtom>(extract_skeleton(make_complete(1))));
  const auto seven = extract_skeleton(make_hole(7));
  REQUIRE(std::holds_alternative<SkeletonDecomposition>(seven));
  CHECK(clique_number_via_skeleton(std::get<SkeletonDecomposition>(seven)) == 2);
  CHECK(reconstruct_atom(std::get<SkeletonDecomposition>(seven)) == make_hole(7));
  // The prism has no clique cutset and no twins but contains triangles.
  const auto pr = extract_skeleton(fx::prism());
  REQUIRE(std::holds_alternative<SkeletonReject>(pr));
  CHECK(std::get<SkeletonReject>(pr).reason == SkeletonReject::Reason::Triangle);
}

TEST_CASE("round trip and clique number on random blow-ups") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Graph base = seed % 2 ? make_gnp(5 + static_cast<int>(seed % 5), 0.45, seed) : make_hole(5 + static_cast<int>(seed % 5));
    std::vector<int> sizes;
    for (int v = 0; v < base.n(); ++v) sizes.push_back(1 + static_cast<int>((seed + static_cast<std::uint64_t>(v)) % 3));
    const Graph g = add_universal_clique(blow_up(base, sizes), static_cast<int>(seed % 3));
    if (g.n() > 24) continue;
    const auto r = extract_skeleton(g);
    if (!std::holds_alternative<SkeletonDecomposition>(r)) continue;
    const auto& sd = std::get<SkeletonDecomposition>(r);
    CHECK(reconstruct_atom(sd) == g);
    CHECK(clique_number_via_skeleton(sd) == static_cast<int>(brute_max_clique(g).size()));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("restriction keeps classes as twin sets") {
  const Graph g = add_universal_clique(fx::blown_c5(), 1);
  const auto sd = std::get<SkeletonDecomposition>(extract_skeleton(g));
  for (Vertex x = 0; x < g.n(); ++x) {
    const VertexSet removed = g.closed_neighborhood(x);
    const auto sub = induced_subgraph(g, complement_of(g, removed));
    CHECK(is_skeleton_of(restrict_skeleton(sd, removed), sub.graph));
  }
  CHECK(is_skeleton_of(restrict_skeleton(sd, VertexSet{0, 3, 10}), induced_subgraph(g, complement_of(g, VertexSet{0, 3, 10})).graph));
}

}
