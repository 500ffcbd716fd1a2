#pragma once

// Tree decompositions: heuristic and exact small-width construction, the
// ear-based triangulation of good-ear skeletons, lifting to atoms, and nice
// form for dynamic programming.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cehf/certificates.hpp"
#include "cehf/ears.hpp"
#include "cehf/graph.hpp"
#include "cehf/skeleton.hpp"

namespace cehf {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;

  /// Largest bag size minus one; -1 without bags.
  int width() const;
};

/// Bags sorted and in range, tree edges forming a tree, vertex and edge
/// coverage, and connected occurrence subtrees.
bool is_valid_decomposition(const Graph& g, const TreeDecomposition& td);

/// Greedy minimum fill-in (ties: fewer neighbours, then smaller id).
std::vector<Vertex> min_fill_ordering(const Graph& g);

/// Bags v + later neighbours in the filled graph; components chained together.
TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order);

/// Contracts every tree edge whose one bag contains the other.
TreeDecomposition compress(const TreeDecomposition& td);

/// Elimination ordering of width <= k if one exists. Throws BudgetExceeded once
/// more than limits.exact_tw_nodes search states are expanded.
std::optional<std::vector<Vertex>> exact_ordering_within(const Graph& g, int k, const Limits& limits = {});

TreeDecomposition heuristic_tree_decomposition(const Graph& g);

struct SkeletonTreewidth {
  enum class Status { Ok, Rejected, Undecided };
  Status status = Status::Undecided;
  TreeDecomposition td;
  bool exact_search = false;  // the exact search ran (min-fill exceeded 5)
  std::optional<ForbiddenWitness> triangle;
  std::string reason;
};

/// Width <= 5 decomposition of a triangle-free skeleton; Rejected when F has a
/// triangle or the exact search proves width > 5, Undecided on budget.
SkeletonTreewidth skeleton_tree_decomposition(const Graph& f, const Limits& limits = {});

/// Reverse maximum cardinality search order (a perfect elimination ordering
/// whenever g is chordal); ties by smallest id.
std::vector<Vertex> mcs_elimination_order(const Graph& g);
/// Zero fill-in along the MCS elimination order.
bool is_chordal(const Graph& g);
/// Maximal cliques as bags, joined by running intersection. g must be chordal.
TreeDecomposition clique_tree(const Graph& g);

/// The triangulation from the treewidth-5 proof: every ear's x, y, z complete
/// to its interior plus the edge xz, and the first base edge joined to the
/// whole base hole. Throws std::invalid_argument unless every ear is good.
Graph triangulation_from_ears(const Graph& f, const EarSequence& es, const Limits& limits = {});

/// Substitutes K_v for v in every bag and appends U. Throws
/// std::invalid_argument when td is not a decomposition of sd.skeleton.
TreeDecomposition lift_tree_decomposition(const TreeDecomposition& td, const SkeletonDecomposition& sd);

/// Bags restricted to `keep` (sorted), relabelled to positions in keep.
TreeDecomposition restrict_decomposition(const TreeDecomposition& td, const VertexSet& keep, int n);

struct NiceNode {
  enum class Kind { Leaf, Introduce, Forget, Join };
  Kind kind;
  VertexSet bag;
  Vertex vertex = -1;  // introduced or forgotten vertex
  std::vector<int> children;
};

/// Rooted nice decomposition: leaves and root have empty bags; children
/// precede their parents in `nodes`.
struct NiceDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;

  int width() const;
  TreeDecomposition as_tree_decomposition() const;
};

/// Throws std::invalid_argument when td is not valid for g.
NiceDecomposition nice_decomposition(const Graph& g, const TreeDecomposition& td);

}  // namespace cehf
