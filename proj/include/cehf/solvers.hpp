#pragma once

// Coloring and maximum weight stable set over the decomposition, skeleton and
// treewidth stack, with brute-force fallbacks under the desk-scale guards.

#include <optional>
#include <string>
#include <vector>

#include "cehf/certificates.hpp"
#include "cehf/decomposition.hpp"
#include "cehf/graph.hpp"
#include "cehf/skeleton.hpp"
#include "cehf/treewidth.hpp"

namespace cehf {

/// v1..vn with vi of minimum degree in G[v1..vi] (ties: smallest id).
std::vector<Vertex> degeneracy_order(const Graph& g);
int min_degree(const Graph& g);

/// Smallest available color along degeneracy_order.
Coloring greedy_color(const Graph& g);

/// Exact q-coloring by dynamic programming over partitions of the bags of a
/// nice form of td. Throws std::invalid_argument for q < 1 or an invalid td,
/// BudgetExceeded past limits.dp_states stored states.
std::optional<Coloring> q_color(const Graph& g, const TreeDecomposition& td, int q, const Limits& limits = {});

/// Merges per-leaf colorings (indexed like the sorted leaf vertex sets, in
/// tree.leaves() order) by permuting colors to agree on every cutset.
Coloring combine_colorings(const Graph& g, const DecompositionTree& tree, const std::vector<Coloring>& atom_colorings,
                           int q);

/// Structure of one leaf of the decomposition tree.
struct AtomStructure {
  VertexSet vertices;  // in ids of the decomposed graph
  Graph graph;         // induced atom
  bool complete = false;
  std::optional<SkeletonDecomposition> skeleton;
  std::optional<TreeDecomposition> skeleton_td;  // width <= 5, when found

  bool structured() const { return complete || skeleton_td.has_value(); }
  /// Lifted decomposition of the atom (complete atoms: a single bag).
  TreeDecomposition atom_td() const;
  int clique_number() const;
  VertexSet max_clique() const;  // atom ids
};

struct StructureAnalysis {
  DecompositionTree tree;
  std::vector<AtomStructure> atoms;  // tree.leaves() order
  bool all_structured() const;
};

StructureAnalysis analyze_structure(const Graph& g, const Limits& limits = {});

struct ChromaticOutcome {
  bool ok = false;
  int chi = 0;
  Coloring coloring;
  std::string method;  // "structural", "brute-force" or "mixed"
  std::string reason;  // why the instance is unsupported
};

/// Per atom: q ascending from omega(atom) with q_color on the lifted
/// decomposition, or brute force when the atom has no skeleton structure.
ChromaticOutcome chromatic_number(const Graph& g, const Limits& limits = {});

struct CliqueOutcome {
  bool ok = false;
  VertexSet clique;
  std::string method;
  std::string reason;
};

CliqueOutcome clique_number(const Graph& g, const Limits& limits = {});

struct SkeletonWeights {
  Graph graph;      // F' with weights: F plus one universal vertex when U is nonempty
  VertexSet chosen;  // atom vertex represented by each vertex of F'
};

SkeletonWeights reduce_to_skeleton_weights(const Graph& atom, const SkeletonDecomposition& sd,
                                           const std::vector<Weight>& w);

/// Maximum weight stable set by dynamic programming over a nice form of td
/// (bags of at most 63 vertices). Negative weights allowed.
StableSetResult mwss_tree_dp(const Graph& g, const TreeDecomposition& td, const std::vector<Weight>& w);

struct MwssStats {
  std::size_t reweighted = 0;         // cutset vertices reweighted
  std::size_t reweight_violations = 0;  // w'(v) > w(v)
  std::size_t restriction_violations = 0;
  std::size_t structural_subproblems = 0;
  std::size_t brute_subproblems = 0;
};

struct MwssOutcome {
  bool ok = false;
  StableSetResult result;
  MwssStats stats;
  std::string reason;
};

/// Top-down over the clique-cutset tree with Tarjan's reweighting, each
/// subproblem solved on the weighted skeleton F' or by brute force.
MwssOutcome mwss(const Graph& g, const Limits& limits = {});

}  // namespace cehf
