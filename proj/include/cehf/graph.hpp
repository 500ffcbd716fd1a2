#pragma once

// Simple undirected graphs with optional integer vertex weights, the
// line-oriented text format, and the two class-preserving constructions
// (clique blow-up and universal clique).

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cehf {

using Vertex = int;
using Weight = std::int64_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Thrown by parse_graph; carries the 1-based line number of the offending line
/// (0 when the problem is global, e.g. a missing header).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an explicit edge list. Rejects loops, duplicate edges
  /// (in either orientation) and out-of-range ids with std::invalid_argument.
  static Graph from_edges(int n, std::span<const Edge> edges, std::vector<Weight> weights = {});

  int n() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t m() const noexcept { return m_; }

  const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// N[v] as a sorted set.
  VertexSet closed_neighborhood(Vertex v) const;

  bool has_weights() const noexcept { return !weights_.empty(); }
  Weight weight(Vertex v) const { return weights_.empty() ? 1 : weights_[static_cast<std::size_t>(v)]; }
  /// Effective weight vector (all ones when the graph is unweighted).
  std::vector<Weight> weights() const;
  Graph with_weights(std::vector<Weight> w) const;
  Graph without_weights() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_clique(std::span<const Vertex> s) const;
  bool is_stable(std::span<const Vertex> s) const;

  /// Equality of vertex count, edge set and effective weights.
  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> adj_;
  std::vector<std::vector<std::uint64_t>> rows_;  // dense adjacency bits
  std::vector<Weight> weights_;
  std::size_t m_ = 0;

  void finalize();
};

/// Mutable accumulator; add_edge is idempotent, loops are rejected.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  void add_edge(Vertex u, Vertex v);
  void set_weight(Vertex v, Weight w);
  int n() const noexcept { return n_; }
  Graph build() &&;

 private:
  int n_;
  std::vector<VertexSet> adj_;
  std::vector<Weight> weights_;
};

// ---- text format --------------------------------------------------------

Graph parse_graph(std::string_view text);
/// Canonical form: header, edges in lexicographic order (1-based, u < v),
/// then "w" lines for every vertex whose weight differs from 1.
std::string serialize(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

// ---- named constructions ------------------------------------------------

Graph make_hole(int k);
Graph make_complete(int n);
Graph make_path(int k);
/// K_{4,4} minus a perfect matching.
Graph make_cube();
/// C5 on v1..v5 plus v6 ~ {v1,v2,v3} and v7 ~ {v1,v4,v5} (ids 0..6).
Graph make_hajos();
/// C4 plus a vertex adjacent to two adjacent vertices of it.
Graph make_house();
/// Hole of length k plus a hub adjacent to every hole vertex.
Graph make_wheel(int k);
Graph make_k23();
/// Two triangles joined by a perfect matching.
Graph make_prism();
/// C5 with every vertex blown up into a clique of size 2k.
Graph make_gk(int k);
/// Erdos-Renyi G(n,p): pairs (u,v), u < v, in lexicographic order, each kept
/// when the next xoshiro256** draw mapped to [0,1) is below p.
Graph make_gnp(int n, double p, std::uint64_t seed);

/// Parses names such as "hole 5", "complete 4", "cube", "hajos", "path 4",
/// "house", "wheel 6", "k23", "prism", "gk 1", "gnp 12 0.4 7". Throws
/// std::invalid_argument on unknown names or bad parameters.
Graph construct_named(std::string_view description);

// ---- operations ---------------------------------------------------------

/// Replaces every vertex v by a clique of sizes[v] vertices; blocks are
/// contiguous in vertex order. Weights are not carried.
Graph blow_up(const Graph& g, std::span<const int> sizes);

/// Adds t pairwise-adjacent vertices complete to V(G), numbered n..n+t-1.
Graph add_universal_clique(const Graph& g, int t);

struct InducedSubgraph {
  Graph graph;
  VertexSet to_parent;  // new id -> original id
};

/// G[S] with vertices relabelled 0..|S|-1 in increasing original order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Sorted complement V(G) \ s.
VertexSet complement_of(const Graph& g, std::span<const Vertex> s);

/// Connected components of G \ removed, each sorted, ordered by minimum vertex.
std::vector<VertexSet> components_without(const Graph& g, std::span<const Vertex> removed);

bool is_connected(const Graph& g);

/// True when the edge list is symmetric, loop-free and sorted (direct scan).
bool check_representation(const Graph& g);

}  // namespace cehf
