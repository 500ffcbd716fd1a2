#pragma once

// True-twin partitions and the skeleton form of an atom: a triangle-free,
// cutset-free graph F blown up into cliques K_v plus a universal clique U.

#include <variant>
#include <vector>

#include "cehf/graph.hpp"

namespace cehf {

/// Classes of equal closed neighbourhoods by ordered refinement (split each
/// class by N[v] for v = 0..n-1). Classes sorted, ordered by minimum vertex.
std::vector<VertexSet> twin_classes(const Graph& g);

struct SkeletonDecomposition {
  Graph skeleton;                     // F; vertex i represents clique_map[i]
  std::vector<VertexSet> clique_map;  // K_v in atom ids, ordered by minimum vertex
  VertexSet universal;                // U in atom ids
  int atom_n = 0;

  /// Minimum vertex of each K_v.
  VertexSet representatives() const;
};

struct CompleteAtom {};

struct SkeletonReject {
  enum class Reason { Triangle, CliqueCutset };
  Reason reason;
  VertexSet skeleton_vertices;  // the triangle or the cutset, as F ids
  SkeletonDecomposition partial;
};

using SkeletonResult = std::variant<SkeletonDecomposition, CompleteAtom, SkeletonReject>;

SkeletonResult extract_skeleton(const Graph& atom);

/// |U| + max(max |K_v|, max over edges vw of F of |K_v| + |K_w|).
int clique_number_via_skeleton(const SkeletonDecomposition& sd);

/// Blow-up of F by |K_v| plus |U| universal vertices, relabelled into atom ids.
Graph reconstruct_atom(const SkeletonDecomposition& sd);

/// The skeleton structure of atom - removed: classes K_v - removed (empty ones
/// dropped) and U - removed, with ids of the induced subgraph on the survivors.
/// F is the induced subgraph of the original skeleton; it need not be
/// cutset-free any more.
SkeletonDecomposition restrict_skeleton(const SkeletonDecomposition& sd, const VertexSet& removed);

/// Every K_v is a set of pairwise true twins in `g` and every vertex of U is
/// universal, with K_v complete to K_w exactly when vw is an edge of F.
bool is_skeleton_of(const SkeletonDecomposition& sd, const Graph& g);

}  // namespace cehf
