#pragma once

// Class membership for (cap, 4-hole)-free odd-signable and (cap, even
// hole)-free graphs, with certificates on both sides.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cehf/certificates.hpp"
#include "cehf/decomposition.hpp"
#include "cehf/graph.hpp"
#include "cehf/skeleton.hpp"

namespace cehf {

enum class GraphClass { CapFourHoleOddSignable, CapEvenHoleFree };

std::string_view to_string(GraphClass c);
/// Accepts "cap-4hole-odd-signable" and "cap-even-hole-free".
GraphClass parse_graph_class(std::string_view name);

/// A hole closed by edge uv and capped by a common neighbour w of u and v,
/// found by breadth-first search; the first (u, v, w) in lexicographic order.
std::optional<ForbiddenWitness> detect_cap_fast(const Graph& g);

/// An induced C4, or nullopt. Exhaustive over nonadjacent pairs.
std::optional<ForbiddenWitness> detect_4hole(const Graph& g);

enum class Verdict { Accepted, Rejected, Undecided };
std::string_view to_string(Verdict v);

struct AtomCertificate {
  VertexSet vertices;  // input ids
  bool complete = false;
  std::optional<SkeletonDecomposition> skeleton;
  /// Signing of the skeleton with every chordless cycle odd. All ones when the
  /// skeleton has to be even-hole-free.
  std::optional<Signing> signing;
  bool needs_even_hole_free = false;
};

struct Recognition {
  Verdict verdict = Verdict::Undecided;
  GraphClass cls = GraphClass::CapFourHoleOddSignable;
  std::string stage;   // "4-hole", "cap", "skeleton", "oracle" or "accepted"
  std::string reason;
  std::optional<ForbiddenWitness> witness;  // input ids, on reject
  DecompositionTree tree;
  std::vector<AtomCertificate> atoms;  // on accept, tree.leaves() order
};

Recognition recognize(const Graph& g, GraphClass cls, const Limits& limits = {});

/// Re-checks an accept certificate: the tree splits G along clique cutsets
/// into the listed atoms, each atom is complete or reconstructs from its
/// skeleton, and every skeleton signing verifies.
bool verify_accept_certificate(const Graph& g, const Recognition& r, const Limits& limits = {});

}  // namespace cehf
