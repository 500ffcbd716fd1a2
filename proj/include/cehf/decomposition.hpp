#pragma once

// Clique-cutset decomposition (Tarjan's scheme over a minimal elimination
// ordering computed by MCS-M).

#include <optional>
#include <string>
#include <vector>

#include "cehf/graph.hpp"

namespace cehf {

/// Minimal elimination ordering by MCS-M. order[i] is the i-th vertex to be
/// eliminated; higher[v] lists the neighbours of v in the filled graph that are
/// eliminated after v, ascending.
struct EliminationOrdering {
  std::vector<Vertex> order;
  std::vector<int> position;
  std::vector<VertexSet> higher;
};

EliminationOrdering mcs_m(const Graph& g);

/// Internal nodes split `vertices` into two children whose vertex sets meet
/// exactly in `cutset`. On connected graphs the left child is always a leaf
/// (the atom split off at that step); a disconnected vertex set is split on the
/// empty cutset into its first component and the rest.
struct DecompositionNode {
  VertexSet vertices;
  VertexSet cutset;
  int left = -1;
  int right = -1;
  bool is_leaf() const noexcept { return left < 0; }
};

struct DecompositionTree {
  std::vector<DecompositionNode> nodes;  // nodes[0] is the root

  std::vector<int> leaves() const;
  /// Leaf vertex sets in order of discovery.
  std::vector<VertexSet> atoms() const;
};

struct CliqueCutset {
  VertexSet cutset;
  VertexSet side;   // the part split off together with the cutset
  VertexSet other;  // the remaining vertices outside the cutset
};

/// First clique cutset met by the decomposition procedure, or nullopt when G
/// has none. Disconnected graphs yield the empty cutset.
std::optional<CliqueCutset> find_clique_cutset(const Graph& g);

DecompositionTree clique_cutset_tree(const Graph& g);

/// Graphviz rendering; vertex ids are printed offset by id_base.
std::string to_dot(const DecompositionTree& t, int id_base = 1);

}  // namespace cehf
