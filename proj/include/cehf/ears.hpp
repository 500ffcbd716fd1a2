#pragma once

// Ears of holes and good ear additions. Graphs built by ear additions number
// their vertices in order of addition: the base hole first, then the interior
// of each ear in path order.

#include <string>
#include <vector>

#include "cehf/certificates.hpp"
#include "cehf/graph.hpp"
#include "cehf/oracles.hpp"

namespace cehf {

struct Ear {
  Cycle host;                // hole of the graph before the addition
  std::vector<Vertex> path;  // x, interior..., z
  Vertex apex = -1;          // y: common neighbour of x and z on host

  Vertex x() const { return path.front(); }
  Vertex z() const { return path.back(); }
};

struct EarSequence {
  Cycle base;
  std::vector<Ear> ears;

  /// Vertex count of the graph before ear i is added.
  int size_before(std::size_t i) const;
  int total_vertices() const { return size_before(ears.size()); }
};

enum class EarStatus { Good, NotGood, NotAnEar };

struct EarCheck {
  EarStatus status;
  std::string reason;
};

/// Checks the ear definition and the three good-ear conditions for adding
/// `ear` to G' = g[0..base_n). The interior of the path must be exactly the
/// vertices base_n..n-1 of g.
EarCheck validate_good_ear(const Graph& g, int base_n, const Ear& ear, const Limits& limits = {});

/// Replays the sequence on g: base must be the hole 0..k-1 in some cyclic
/// order and every ear must pass validate_good_ear.
EarCheck validate_ear_sequence(const Graph& g, const EarSequence& es, const Limits& limits = {});

}  // namespace cehf
