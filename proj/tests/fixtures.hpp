#pragma once

#include <vector>

#include "cehf/graph.hpp"

namespace fx {

using cehf::Graph;

inline Graph edges(int n, std::vector<cehf::Edge> e) { return Graph::from_edges(n, e); }

// C4 with an apex on two adjacent rim vertices.
inline Graph house() { return edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}}); }

inline Graph wheel(int k) { return cehf::add_universal_clique(cehf::make_hole(k), 1); }

inline Graph k23() { return edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

// Two triangles 0-1-2 and 3-4-5 joined by a perfect matching.
inline Graph prism() { return edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }

inline Graph blown_c5(int k = 1) {
  std::vector<int> sizes(5, 2 * k);
  return cehf::blow_up(cehf::make_hole(5), sizes);
}

inline Graph diamond() { return edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

// C6 plus a vertex adjacent to the given rim positions.
inline Graph c6_hub(std::vector<int> rim) {
  std::vector<cehf::Edge> e;
  for (int i = 0; i < 6; ++i) e.push_back({i, (i + 1) % 6});
  for (int r : rim) e.push_back({r, 6});
  return edges(7, e);
}

}  // namespace fx
