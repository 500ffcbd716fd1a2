#include "cehf/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace cehf {

EliminationOrdering mcs_m(const Graph& g) {
  const int n = g.n();
  EliminationOrdering eo;
  eo.order.assign(static_cast<std::size_t>(n), -1);
  eo.position.assign(static_cast<std::size_t>(n), -1);
  eo.higher.assign(static_cast<std::size_t>(n), {});
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> numbered(static_cast<std::size_t>(n), 0);
  std::vector<int> key(static_cast<std::size_t>(n));

  for (int i = n - 1; i >= 0; --i) {
    Vertex v = -1;
    for (Vertex u = 0; u < n; ++u)
      if (!numbered[static_cast<std::size_t>(u)] && (v < 0 || weight[static_cast<std::size_t>(u)] > weight[static_cast<std::size_t>(v)]))
        v = u;
    numbered[static_cast<std::size_t>(v)] = 1;
    eo.order[static_cast<std::size_t>(i)] = v;
    eo.position[static_cast<std::size_t>(v)] = i;

    // Bottleneck search: key[u] is the least possible maximum weight of the
    // interior of an unnumbered path v..u.
    std::fill(key.begin(), key.end(), n + 1);
    using Item = std::pair<int, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (Vertex u : g.neighbors(v))
      if (!numbered[static_cast<std::size_t>(u)]) {
        key[static_cast<std::size_t>(u)] = -1;
        pq.push({-1, u});
      }
    while (!pq.empty()) {
      auto [k, x] = pq.top();
      pq.pop();
      if (k != key[static_cast<std::size_t>(x)]) continue;
      const int through = std::max(k, weight[static_cast<std::size_t>(x)]);
      for (Vertex u : g.neighbors(x))
        if (!numbered[static_cast<std::size_t>(u)] && through < key[static_cast<std::size_t>(u)]) {
          key[static_cast<std::size_t>(u)] = through;
          pq.push({through, u});
        }
    }
    std::vector<Vertex> reached;
    for (Vertex u = 0; u < n; ++u)
      if (!numbered[static_cast<std::size_t>(u)] && key[static_cast<std::size_t>(u)] < weight[static_cast<std::size_t>(u)])
        reached.push_back(u);
    for (Vertex u : reached) {
      ++weight[static_cast<std::size_t>(u)];
      eo.higher[static_cast<std::size_t>(u)].push_back(v);
    }
  }
  for (auto& h : eo.higher) std::sort(h.begin(), h.end());
  return eo;
}

namespace {

struct Split {
  VertexSet cutset, side, rest;
};

// Runs Tarjan's loop; `on_split` receives each atom split in order and the
// final remainder is returned.
VertexSet run_decomposition(const Graph& g, const std::function<void(const Split&)>& on_split, bool first_only) {
  const int n = g.n();
  const EliminationOrdering eo = mcs_m(g);
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  int alive_count = n;

  for (int i = 0; i < n; ++i) {
    const Vertex v = eo.order[static_cast<std::size_t>(i)];
    if (!alive[static_cast<std::size_t>(v)]) continue;
    VertexSet c;
    for (Vertex w : eo.higher[static_cast<std::size_t>(v)])
      if (alive[static_cast<std::size_t>(w)]) c.push_back(w);
    if (!g.is_clique(c)) continue;

    std::vector<char> blocked(static_cast<std::size_t>(n), 0);
    for (Vertex w : c) blocked[static_cast<std::size_t>(w)] = 1;
    VertexSet a{v};
    blocked[static_cast<std::size_t>(v)] = 1;
    for (std::size_t h = 0; h < a.size(); ++h)
      for (Vertex u : g.neighbors(a[h]))
        if (alive[static_cast<std::size_t>(u)] && !blocked[static_cast<std::size_t>(u)]) {
          blocked[static_cast<std::size_t>(u)] = 1;
          a.push_back(u);
        }
    if (static_cast<int>(a.size() + c.size()) == alive_count) continue;

    std::sort(a.begin(), a.end());
    Split s;
    s.cutset = c;
    s.side = a;
    for (Vertex u : a) alive[static_cast<std::size_t>(u)] = 0;
    alive_count -= static_cast<int>(a.size());
    for (Vertex u = 0; u < n; ++u)
      if (alive[static_cast<std::size_t>(u)]) s.rest.push_back(u);
    on_split(s);
    if (first_only) return {};
  }
  VertexSet remaining;
  for (Vertex u = 0; u < n; ++u)
    if (alive[static_cast<std::size_t>(u)]) remaining.push_back(u);
  return remaining;
}

}  // namespace

std::optional<CliqueCutset> find_clique_cutset(const Graph& g) {
  const auto comps = components_without(g, VertexSet{});
  if (comps.size() > 1) {
    CliqueCutset k{{}, comps[0], complement_of(g, comps[0])};
    return k;
  }
  std::optional<CliqueCutset> out;
  run_decomposition(g, [&](const Split& s) {
    CliqueCutset k{s.cutset, s.side, {}};
    std::set_difference(s.rest.begin(), s.rest.end(), s.cutset.begin(), s.cutset.end(), std::back_inserter(k.other));
    out = std::move(k);
  }, true);
  return out;
}

namespace {

VertexSet mapped(const VertexSet& s, const VertexSet& to_parent) {
  VertexSet out;
  for (Vertex v : s) out.push_back(to_parent[static_cast<std::size_t>(v)]);
  return out;
}

int build(const Graph& g, const VertexSet& s, DecompositionTree& t) {
  const int id = static_cast<int>(t.nodes.size());
  t.nodes.push_back({s, {}, -1, -1});
  const auto sub = induced_subgraph(g, s);
  const auto comps = components_without(sub.graph, VertexSet{});
  if (comps.size() > 1) {
    const VertexSet first = mapped(comps[0], sub.to_parent);
    VertexSet others;
    std::set_difference(s.begin(), s.end(), first.begin(), first.end(), std::back_inserter(others));
    const int l = build(g, first, t);
    const int r = build(g, others, t);
    t.nodes[static_cast<std::size_t>(id)].left = l;
    t.nodes[static_cast<std::size_t>(id)].right = r;
    return id;
  }
  int current = id;
  run_decomposition(sub.graph, [&](const Split& sp) {
    VertexSet atom;
    std::set_union(sp.side.begin(), sp.side.end(), sp.cutset.begin(), sp.cutset.end(), std::back_inserter(atom));
    auto& cur = t.nodes[static_cast<std::size_t>(current)];
    cur.cutset = mapped(sp.cutset, sub.to_parent);
    cur.left = static_cast<int>(t.nodes.size());
    cur.right = cur.left + 1;
    t.nodes.push_back({mapped(atom, sub.to_parent), {}, -1, -1});
    t.nodes.push_back({mapped(sp.rest, sub.to_parent), {}, -1, -1});
    current = static_cast<int>(t.nodes.size()) - 1;
  }, false);
  return id;
}

}  // namespace

DecompositionTree clique_cutset_tree(const Graph& g) {
  DecompositionTree t;
  VertexSet all(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) all[static_cast<std::size_t>(v)] = v;
  build(g, all, t);
  return t;
}

std::vector<int> DecompositionTree::leaves() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].is_leaf()) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<VertexSet> DecompositionTree::atoms() const {
  std::vector<VertexSet> out;
  for (int i : leaves()) out.push_back(nodes[static_cast<std::size_t>(i)].vertices);
  return out;
}

std::string to_dot(const DecompositionTree& t, int id_base) {
  std::ostringstream os;
  os << "digraph decomposition {\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& nd = t.nodes[i];
    os << "  n" << i << " [";
    if (nd.is_leaf()) {
      os << "shape=box, label=\"atom |V|=" << nd.vertices.size() << "\"";
    } else {
      os << "label=\"K={";
      for (std::size_t j = 0; j < nd.cutset.size(); ++j) os << (j ? "," : "") << nd.cutset[j] + id_base;
      os << "}\"";
    }
    os << "];\n";
  }
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    if (!t.nodes[i].is_leaf()) {
      os << "  n" << i << " -> n" << t.nodes[i].left << ";\n";
      os << "  n" << i << " -> n" << t.nodes[i].right << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace cehf
