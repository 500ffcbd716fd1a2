#include "cehf/ears.hpp"

#include <algorithm>

namespace cehf {

int EarSequence::size_before(std::size_t i) const {
  int n = static_cast<int>(base.size());
  for (std::size_t j = 0; j < i && j < ears.size(); ++j) n += static_cast<int>(ears[j].path.size()) - 2;
  return n;
}

namespace {

bool induces_hole(const Graph& g, const std::vector<Vertex>& c) {
  const std::size_t k = c.size();
  if (k < 4) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (g.adjacent(c[i], c[j]) != ((j == i + 1) || (i == 0 && j == k - 1))) return false;
  return true;
}

bool induces_path(const Graph& g, const std::vector<Vertex>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (g.adjacent(p[i], p[j]) != (j == i + 1)) return false;
  return true;
}

EarCheck bad(std::string why) { return {EarStatus::NotAnEar, std::move(why)}; }
EarCheck not_good(std::string why) { return {EarStatus::NotGood, std::move(why)}; }

}  // namespace

EarCheck validate_good_ear(const Graph& g, int base_n, const Ear& ear, const Limits& limits) {
  const auto& h = ear.host;
  const auto& p = ear.path;
  const int n = g.n();
  if (base_n < 0 || base_n > n) return bad("base size out of range");
  if (p.size() < 3) return bad("ear needs at least one interior vertex");
  for (Vertex v : h)
    if (v < 0 || v >= base_n) return bad("host hole leaves G'");
  for (Vertex v : p)
    if (v < 0 || v >= n) return bad("path vertex out of range");
  std::vector<Vertex> interior(p.begin() + 1, p.end() - 1);
  std::vector<Vertex> sorted = interior;
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(sorted.size()) != n - base_n) return bad("interior is not the set of new vertices");
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != base_n + static_cast<Vertex>(i)) return bad("interior is not the set of new vertices");

  const Graph gp = induced_subgraph(g, [&] {
    VertexSet s(static_cast<std::size_t>(base_n));
    for (int i = 0; i < base_n; ++i) s[static_cast<std::size_t>(i)] = i;
    return s;
  }()).graph;
  if (!induces_hole(gp, h)) return bad("host is not a hole of G'");
  const auto pos = [&](Vertex v) { return std::find(h.begin(), h.end(), v) - h.begin(); };
  const std::ptrdiff_t k = static_cast<std::ptrdiff_t>(h.size());
  const Vertex x = ear.x(), y = ear.apex, z = ear.z();
  const auto px = pos(x), py = pos(y), pz = pos(z);
  if (px == k || py == k || pz == k) return bad("attachments or apex not on the host hole");
  const auto next = [&](std::ptrdiff_t i) { return (i + 1) % k; };
  const auto prev = [&](std::ptrdiff_t i) { return (i + k - 1) % k; };
  if (!((prev(py) == px && next(py) == pz) || (next(py) == px && prev(py) == pz)))
    return bad("x and z are not the host neighbours of y");
  if (!induces_path(g, p)) return bad("path is not chordless");

  // Walk from z around the host away from y until x, then along P back to z.
  std::vector<Vertex> augmented;
  const bool forward = next(pz) != py;
  for (std::ptrdiff_t c = 0, j = pz; c < k - 1; ++c, j = forward ? next(j) : prev(j))
    augmented.push_back(h[static_cast<std::size_t>(j)]);
  augmented.insert(augmented.end(), interior.begin(), interior.end());
  if (!induces_hole(g, augmented)) return bad("(H - y) + P is not a hole");
  for (Vertex q : interior)
    for (Vertex u : g.neighbors(q))
      if (u < base_n && u != x && u != y && u != z) return bad("interior vertex adjacent to G' outside {x,y,z}");

  int yp = 0;
  for (Vertex v : p) yp += g.adjacent(y, v) ? 1 : 0;
  if (yp % 2 == 0) return not_good("y has an even number of neighbours on P");

  std::string why;
  for_each_chordless_cycle(gp, 4, gp.n(), [&](const Cycle& c) {
    std::vector<char> on(static_cast<std::size_t>(base_n), 0);
    for (Vertex v : c) on[static_cast<std::size_t>(v)] = 1;
    auto count_on = [&](Vertex v) {
      int t = 0;
      for (Vertex u : gp.neighbors(v)) t += on[static_cast<std::size_t>(u)];
      return t;
    };
    if (on[static_cast<std::size_t>(x)] && on[static_cast<std::size_t>(y)] && on[static_cast<std::size_t>(z)]) {
      for (Vertex v : gp.neighbors(y))
        if (!on[static_cast<std::size_t>(v)] && count_on(v) >= 3) {
          why = "G' has a wheel through x, y, z whose centre is adjacent to y";
          return false;
        }
    }
    if (!on[static_cast<std::size_t>(y)] && on[static_cast<std::size_t>(x)] && on[static_cast<std::size_t>(z)] && count_on(y) >= 3) {
      why = "G' has a wheel centred at y through x and z";
      return false;
    }
    return true;
  }, limits);
  if (!why.empty()) return not_good(why);
  return {EarStatus::Good, "good"};
}

EarCheck validate_ear_sequence(const Graph& g, const EarSequence& es, const Limits& limits) {
  const int k = static_cast<int>(es.base.size());
  if (es.total_vertices() != g.n()) return bad("sequence does not account for every vertex");
  VertexSet sorted = es.base;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < k; ++i)
    if (sorted[static_cast<std::size_t>(i)] != i) return bad("base hole must use vertices 0..k-1");
  VertexSet first(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) first[static_cast<std::size_t>(i)] = i;
  if (!induces_hole(induced_subgraph(g, first).graph, es.base)) return bad("base is not a hole");
  for (std::size_t i = 0; i < es.ears.size(); ++i) {
    VertexSet upto(static_cast<std::size_t>(es.size_before(i + 1)));
    for (std::size_t v = 0; v < upto.size(); ++v) upto[v] = static_cast<Vertex>(v);
    const auto r = validate_good_ear(induced_subgraph(g, upto).graph, es.size_before(i), es.ears[i], limits);
    if (r.status != EarStatus::Good) return {r.status, "ear " + std::to_string(i + 1) + ": " + r.reason};
  }
  return {EarStatus::Good, "good"};
}

}  // namespace cehf
