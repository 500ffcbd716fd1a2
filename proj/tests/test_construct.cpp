#include <algorithm>
#include <set>

#include "cehf/construct.hpp"
#include "cehf/oracles.hpp"
#include "cehf/solvers.hpp"
#include "cehf/treewidth.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cehf;

TEST_CASE("random_skeleton without ears is the base hole") {
  GeneratorParams p;
  p.ear_count = 0;
  p.base_length = 7;
  const auto s = random_skeleton(p);
  CHECK(s.skeleton == make_hole(7));
  CHECK(s.ears.ears.empty());
}

TEST_CASE("random skeletons are good ear sequences in class") {
  for (auto cls : {GraphClass::CapFourHoleOddSignable, GraphClass::CapEvenHoleFree}) {
    int ears = 0;
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      GeneratorParams p;
      p.seed = seed;
      p.ear_count = 4;
      p.target = cls;
      p.max_vertices = 40;
      const auto s = random_skeleton(p);
      const Graph& f = s.skeleton;
      CAPTURE(serialize(f));
      ears += static_cast<int>(s.ears.ears.size());
      CHECK(f.n() <= 40);
      CHECK(s.ears.total_vertices() == f.n());
      CHECK(validate_ear_sequence(f, s.ears).status == EarStatus::Good);
      CHECK_FALSE(find_forbidden_induced(f, ForbiddenKind::Triangle));
      CHECK_FALSE(find_forbidden_induced(f, ForbiddenKind::FourHole));
      CHECK_FALSE(brute_clique_cutset(f, Limits::uniform(64)));
      CHECK(odd_signable_signing(f).has_value());
      if (cls == GraphClass::CapEvenHoleFree) CHECK_FALSE(find_forbidden_induced(f, ForbiddenKind::EvenHole));

      const auto st = skeleton_tree_decomposition(f);
      REQUIRE(st.status == SkeletonTreewidth::Status::Ok);
      CHECK(is_valid_decomposition(f, st.td));
      CHECK(st.td.width() <= 5);
      const Graph t = triangulation_from_ears(f, s.ears);
      CHECK(is_chordal(t));
      CHECK(brute_max_clique(t, Limits::uniform(64)).size() <= 6);
    }
    CHECK(ears > 25);
  }
}

TEST_CASE("generate_instance is deterministic") {
  GeneratorParams p;
  p.seed = 17;
  p.glue_count = 2;
  const auto a = generate_instance(p);
  const auto b = generate_instance(p);
  CHECK(serialize(a.graph) == serialize(b.graph));
  CHECK(provenance_json(a).dump() == provenance_json(b).dump());
  p.seed = 18;
  CHECK(serialize(generate_instance(p).graph) != serialize(a.graph));
}

TEST_CASE("G1 from the C5 skeleton") {
  GeneratorParams p;
  p.ear_count = 0;
  p.base_length = 5;
  p.max_blowup = 1;
  p.max_universal = 0;
  const auto id = generate_instance(p);
  CHECK(id.graph == make_hole(5));
  CHECK(id.expected_omega == 2);
  p.max_blowup = 2;
  bool saw_g1 = false;
  for (std::uint64_t seed = 1; seed <= 40 && !saw_g1; ++seed) {
    p.seed = seed;
    const auto inst = generate_instance(p);
    saw_g1 = inst.atoms[0].blowup == std::vector<int>(5, 2);
    if (saw_g1) CHECK(inst.graph == fx::blown_c5());
  }
  CHECK(saw_g1);
}

TEST_CASE("glue_atoms") {
  const Graph k3 = make_complete(3);
  const auto d = glue_atoms({k3, k3}, {GlueJoint{0, 1, {0, 1}, {0, 1}}});
  CHECK(d.graph.n() == 4);
  CHECK(d.graph.m() == 5);
  CHECK(d.graph == fx::edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}));
  CHECK(glue_atoms({fx::house()}, {}).graph == fx::house());

  const Graph b = fx::blown_c5();
  const auto two = glue_atoms({b, b}, {GlueJoint{1, 0, {0, 1}, {2, 3}}});
  CHECK(two.graph.n() == 18);
  // Maximal atoms are the glued copies; the other leaves are cliques inside them.
  std::set<VertexSet> expected;
  for (const auto& m : two.to_global) expected.insert([&] { auto v = m; std::sort(v.begin(), v.end()); return v; }());
  std::set<VertexSet> maximal;
  const auto leaves = clique_cutset_tree(two.graph).atoms();
  for (const auto& a : leaves) {
    const bool inside = std::any_of(leaves.begin(), leaves.end(), [&](const VertexSet& b) {
      return b.size() > a.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
    });
    if (!inside) maximal.insert(a);
    else CHECK(two.graph.is_clique(a));
  }
  CHECK(maximal == expected);

  CHECK_THROWS_AS(glue_atoms({k3, k3}, {GlueJoint{0, 1, {0}, {0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(glue_atoms({b, b}, {GlueJoint{0, 1, {0, 4}, {0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(glue_atoms({k3, k3}, {GlueJoint{0, 1, {0}, {0}}, GlueJoint{1, 0, {1}, {1}}}), std::invalid_argument);
  CHECK_THROWS_AS(glue_atoms({k3}, {GlueJoint{0, 3, {0}, {0}}}), std::invalid_argument);
}

TEST_CASE("generated instances are in class") {
  for (auto cls : {GraphClass::CapFourHoleOddSignable, GraphClass::CapEvenHoleFree}) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      GeneratorParams p;
      p.seed = seed;
      p.target = cls;
      p.glue_count = static_cast<int>(seed % 3);
      p.max_vertices = 40;
      const auto inst = generate_instance(p);
      const Graph& g = inst.graph;
      CAPTURE(serialize(g));
      CHECK(g.n() <= 40);
      const auto r = recognize(g, cls);
      CHECK(r.verdict == Verdict::Accepted);
      CHECK(verify_accept_certificate(g, r));
      CHECK_FALSE(find_forbidden_induced(g, ForbiddenKind::Cap));
      if (cls == GraphClass::CapEvenHoleFree) CHECK_FALSE(find_forbidden_induced(g, ForbiddenKind::EvenHole));
      else CHECK(odd_signable_signing(g).has_value());
      if (g.n() <= 24) CHECK(static_cast<int>(brute_max_clique(g).size()) == inst.expected_omega);
      const auto k = clique_number(g);
      REQUIRE(k.ok);
      CHECK(static_cast<int>(k.clique.size()) == inst.expected_omega);
      for (const auto& j : inst.joints) {
        std::set<Vertex> shared;
        for (Vertex v : j.clique) shared.insert(inst.atoms[static_cast<std::size_t>(j.atom)].to_global[static_cast<std::size_t>(v)]);
        CHECK(shared.size() == j.clique.size());
      }
    }
  }
}
