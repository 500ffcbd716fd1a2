#pragma once

// Witness types shared by the oracles, recognition and solver layers, with
// definitional re-checkers.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cehf/graph.hpp"

namespace cehf {

/// Desk-scale guards for exponential searches. Exceeding one raises
/// BudgetExceeded; callers turn that into an "undecided"/"unsupported" outcome.
struct Limits {
  int chromatic_max_n = 16;
  int mwss_max_n = 24;
  int clique_max_n = 24;
  int cutset_max_n = 16;
  int cycle_oracle_max_n = 64;
  std::size_t max_search_steps = 50'000'000;  // chordless-cycle DFS extensions
  std::size_t exact_tw_nodes = 2'000'000;
  std::size_t dp_states = 4'000'000;

  /// Every size guard set to n, every step/node/state budget to 100000 * n.
  static Limits uniform(int n);
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ForbiddenKind { EvenHole, FourHole, Cap, Theta, Prism, EvenWheel, Triangle };

std::string_view to_string(ForbiddenKind kind);
/// Accepts "even-hole", "4-hole", "cap", "theta", "prism", "even-wheel", "triangle".
ForbiddenKind parse_forbidden_kind(std::string_view name);

/// Ordered vertex list realising a forbidden induced structure:
///   triangle            the three vertices
///   even-hole, 4-hole   the hole in cyclic order
///   cap, even-wheel     the hole in cyclic order followed by the extra vertex
///   theta               x, y, then the interiors of the three x-y paths (each from x)
///   prism               x1 x2 x3 y1 y2 y3, then the interiors of the paths xi..yi
struct ForbiddenWitness {
  ForbiddenKind kind;
  std::vector<Vertex> vertices;
};

/// Re-checks a witness against the definition of its kind on the induced
/// subgraph of `g`.
bool check_witness(const Graph& g, const ForbiddenWitness& w);

/// Edge signing aligned with g.edges().
struct Signing {
  std::vector<Edge> edges;
  std::vector<unsigned char> value;
};

/// Proper coloring, colors 1..q indexed by vertex.
using Coloring = std::vector<int>;

bool is_proper_coloring(const Graph& g, const Coloring& c);
int color_count(const Coloring& c);

struct StableSetResult {
  VertexSet set;
  Weight weight = 0;
};

}  // namespace cehf
