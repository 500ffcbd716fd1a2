#include "cehf/certificates.hpp"

#include <algorithm>
#include <set>

namespace cehf {

Limits Limits::uniform(int n) {
  Limits l;
  l.chromatic_max_n = l.mwss_max_n = l.clique_max_n = l.cutset_max_n = l.cycle_oracle_max_n = n;
  const std::size_t budget = 100000u * static_cast<std::size_t>(std::max(n, 1));
  l.max_search_steps = l.exact_tw_nodes = l.dp_states = budget;
  return l;
}

std::string_view to_string(ForbiddenKind kind) {
  switch (kind) {
    case ForbiddenKind::EvenHole: return "even-hole";
    case ForbiddenKind::FourHole: return "4-hole";
    case ForbiddenKind::Cap: return "cap";
    case ForbiddenKind::Theta: return "theta";
    case ForbiddenKind::Prism: return "prism";
    case ForbiddenKind::EvenWheel: return "even-wheel";
    case ForbiddenKind::Triangle: return "triangle";
  }
  return "?";
}

ForbiddenKind parse_forbidden_kind(std::string_view name) {
  for (auto k : {ForbiddenKind::EvenHole, ForbiddenKind::FourHole, ForbiddenKind::Cap, ForbiddenKind::Theta,
                 ForbiddenKind::Prism, ForbiddenKind::EvenWheel, ForbiddenKind::Triangle})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown structure kind '" + std::string(name) + "'");
}

namespace {

bool distinct_in_range(const Graph& g, const std::vector<Vertex>& vs) {
  std::set<Vertex> seen;
  for (Vertex v : vs) {
    if (v < 0 || v >= g.n() || !seen.insert(v).second) return false;
  }
  return true;
}

bool is_hole(const Graph& g, const std::vector<Vertex>& c) {
  const std::size_t k = c.size();
  if (k < 4) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(c[i], c[j]) != consecutive) return false;
    }
  return true;
}

int neighbors_in(const Graph& g, Vertex x, const std::vector<Vertex>& s) {
  return static_cast<int>(std::count_if(s.begin(), s.end(), [&](Vertex v) { return g.adjacent(x, v); }));
}

// Components of the graph on `verts` using only edges accepted by `keep`.
template <typename Keep>
std::vector<std::vector<Vertex>> local_components(const std::vector<Vertex>& verts, Keep keep) {
  std::vector<int> comp(verts.size(), -1);
  std::vector<std::vector<Vertex>> out;
  for (std::size_t s = 0; s < verts.size(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = static_cast<int>(out.size());
    out.emplace_back();
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      out.back().push_back(verts[i]);
      for (std::size_t j = 0; j < verts.size(); ++j)
        if (comp[j] == -1 && keep(verts[i], verts[j])) {
          comp[j] = comp[s];
          stack.push_back(j);
        }
    }
  }
  return out;
}

bool check_theta(const Graph& g, const std::vector<Vertex>& s) {
  if (s.size() < 5) return false;
  const Vertex x = s[0], y = s[1];
  if (g.adjacent(x, y)) return false;
  for (Vertex v : s) {
    const int d = neighbors_in(g, v, s);
    if (d != ((v == x || v == y) ? 3 : 2)) return false;
  }
  std::vector<Vertex> rest(s.begin() + 2, s.end());
  auto comps = local_components(rest, [&](Vertex a, Vertex b) { return g.adjacent(a, b); });
  if (comps.size() != 3) return false;
  for (const auto& c : comps)
    if (neighbors_in(g, x, c) != 1 || neighbors_in(g, y, c) != 1) return false;
  return true;
}

bool check_prism(const Graph& g, const std::vector<Vertex>& s) {
  if (s.size() < 6) return false;
  const std::vector<Vertex> xs(s.begin(), s.begin() + 3), ys(s.begin() + 3, s.begin() + 6);
  if (!g.is_clique(xs) || !g.is_clique(ys)) return false;
  auto in = [](const std::vector<Vertex>& t, Vertex v) { return std::find(t.begin(), t.end(), v) != t.end(); };
  for (Vertex v : s) {
    const int d = neighbors_in(g, v, s);
    if (d != ((in(xs, v) || in(ys, v)) ? 3 : 2)) return false;
  }
  auto path_edge = [&](Vertex a, Vertex b) {
    if (!g.adjacent(a, b)) return false;
    return !((in(xs, a) && in(xs, b)) || (in(ys, a) && in(ys, b)));
  };
  auto comps = local_components(s, path_edge);
  if (comps.size() != 3) return false;
  for (int i = 0; i < 3; ++i) {
    const auto it = std::find_if(comps.begin(), comps.end(), [&](const auto& c) { return in(c, xs[static_cast<std::size_t>(i)]); });
    if (!in(*it, ys[static_cast<std::size_t>(i)])) return false;
    int triangle_members = 0;
    for (Vertex v : *it) triangle_members += (in(xs, v) || in(ys, v)) ? 1 : 0;
    if (triangle_members != 2) return false;
  }
  return true;
}

}  // namespace

bool check_witness(const Graph& g, const ForbiddenWitness& w) {
  const auto& v = w.vertices;
  if (!distinct_in_range(g, v)) return false;
  switch (w.kind) {
    case ForbiddenKind::Triangle: return v.size() == 3 && g.is_clique(v);
    case ForbiddenKind::FourHole: return v.size() == 4 && is_hole(g, v);
    case ForbiddenKind::EvenHole: return v.size() % 2 == 0 && is_hole(g, v);
    case ForbiddenKind::Cap: {
      if (v.size() < 5) return false;
      const std::vector<Vertex> hole(v.begin(), v.end() - 1);
      if (!is_hole(g, hole)) return false;
      std::vector<Vertex> nb;
      for (Vertex h : hole)
        if (g.adjacent(v.back(), h)) nb.push_back(h);
      return nb.size() == 2 && g.adjacent(nb[0], nb[1]);
    }
    case ForbiddenKind::EvenWheel: {
      if (v.size() < 5) return false;
      const std::vector<Vertex> hole(v.begin(), v.end() - 1);
      if (!is_hole(g, hole)) return false;
      const int k = neighbors_in(g, v.back(), hole);
      return k >= 4 && k % 2 == 0;
    }
    case ForbiddenKind::Theta: return check_theta(g, v);
    case ForbiddenKind::Prism: return check_prism(g, v);
  }
  return false;
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (c.size() != static_cast<std::size_t>(g.n())) return false;
  for (int x : c)
    if (x < 1) return false;
  for (auto [u, v] : g.edges())
    if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) return false;
  return true;
}

int color_count(const Coloring& c) {
  std::set<int> used(c.begin(), c.end());
  return static_cast<int>(used.size());
}

}  // namespace cehf
