#pragma once

// Random in-class instances: skeletons grown by good ear additions, blown up
// into cliques, extended by a universal clique and glued along cliques.

#include <cstdint>
#include <string>
#include <vector>

#include "cehf/ears.hpp"
#include "cehf/graph.hpp"
#include "cehf/recognition.hpp"
#include "json.hpp"

namespace cehf {

struct GeneratorParams {
  std::uint64_t seed = 1;
  int ear_count = 3;
  int max_ear_length = 8;  // edges of an ear path
  int max_blowup = 2;
  int max_universal = 1;
  int glue_count = 0;
  GraphClass target = GraphClass::CapFourHoleOddSignable;
  int max_vertices = 60;  // whole instance
  int base_length = 0;    // 0: random in 5..8 (odd only for the even-hole-free class)

  /// Throws std::invalid_argument on negative bounds or max_ear_length < 2.
  void validate() const;
};

struct SkeletonSample {
  Graph skeleton;
  EarSequence ears;
  int attempts = 0;  // candidate ears sampled
};

/// Grows a skeleton from a hole by good ears that keep it triangle-free,
/// 4-hole-free and cutset-free (and even-hole-free for that class). At most
/// max_vertices vertices; fewer ears than requested when sampling stalls.
SkeletonSample random_skeleton(const GeneratorParams& p, const Limits& limits = {});

struct GlueJoint {
  int atom = 0, partner = 0;
  VertexSet clique, partner_clique;  // local ids, identified position by position
};

struct GlueResult {
  Graph graph;
  std::vector<std::vector<Vertex>> to_global;  // per atom, local id -> glued id
};

/// Identifies the joint cliques. Throws std::invalid_argument when a joint set
/// is not a clique, sizes differ, an index is out of range, or the joints
/// form a cycle over the atoms.
GlueResult glue_atoms(const std::vector<Graph>& atoms, const std::vector<GlueJoint>& joints);

struct AtomProvenance {
  std::uint64_t seed = 0;
  SkeletonSample skeleton;
  std::vector<int> blowup;  // |K_v| per skeleton vertex
  int universal = 0;
  int omega = 0;
  std::vector<Vertex> to_global;
};

struct Instance {
  Graph graph;
  GeneratorParams params;
  std::vector<AtomProvenance> atoms;
  std::vector<GlueJoint> joints;
  int expected_omega = 0;
};

/// glue_count + 1 atoms (fewer when max_vertices runs out), each glued to an
/// earlier one along a clique inside a single twin class.
Instance generate_instance(const GeneratorParams& p, const Limits& limits = {});

nlohmann::json provenance_json(const Instance& inst);

}  // namespace cehf
