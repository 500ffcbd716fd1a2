#include "cehf/solvers.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "cehf/oracles.hpp"

namespace cehf {

std::vector<Vertex> degeneracy_order(const Graph& g) {
  const int n = g.n();
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
  std::vector<Vertex> removal;
  for (int i = 0; i < n; ++i) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!removed[static_cast<std::size_t>(v)] && (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)])) best = v;
    removed[static_cast<std::size_t>(best)] = 1;
    removal.push_back(best);
    for (Vertex u : g.neighbors(best)) --deg[static_cast<std::size_t>(u)];
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

int min_degree(const Graph& g) {
  int d = g.n() > 0 ? g.degree(0) : 0;
  for (Vertex v = 1; v < g.n(); ++v) d = std::min(d, g.degree(v));
  return d;
}

Coloring greedy_color(const Graph& g) {
  Coloring c(static_cast<std::size_t>(g.n()), 0);
  std::vector<char> used;
  for (Vertex v : degeneracy_order(g)) {
    used.assign(static_cast<std::size_t>(g.degree(v)) + 2, 0);
    for (Vertex u : g.neighbors(v)) {
      const int cu = c[static_cast<std::size_t>(u)];
      if (cu > 0 && cu < static_cast<int>(used.size())) used[static_cast<std::size_t>(cu)] = 1;
    }
    int col = 1;
    while (used[static_cast<std::size_t>(col)]) ++col;
    c[static_cast<std::size_t>(v)] = col;
  }
  return c;
}

// ---- q-coloring ---------------------------------------------------------

namespace {

// Partition of a bag as labels in first-occurrence normal form.
using Partition = std::string;

void normalize(Partition& p) {
  char map[256];
  std::fill(std::begin(map), std::end(map), static_cast<char>(-1));
  char next = 0;
  for (char& c : p) {
    auto& m = map[static_cast<unsigned char>(c)];
    if (m < 0) m = next++;
    c = m;
  }
}

int block_count(const Partition& p) {
  int k = 0;
  for (char c : p) k = std::max(k, c + 1);
  return k;
}

std::size_t position(const VertexSet& bag, Vertex v) {
  return static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

template <typename Key>
struct Table {
  std::vector<Key> keys;
  std::vector<std::pair<int, int>> back;
  std::unordered_map<Key, int> index;

  int add(const Key& k, std::pair<int, int> b, std::size_t& budget_used, std::size_t budget) {
    auto [it, fresh] = index.emplace(k, static_cast<int>(keys.size()));
    if (fresh) {
      if (++budget_used > budget) throw BudgetExceeded("dynamic programming state budget exceeded");
      keys.push_back(k);
      back.push_back(b);
    }
    return it->second;
  }
};

}  // namespace

std::optional<Coloring> q_color(const Graph& g, const TreeDecomposition& td, int q, const Limits& limits) {
  if (q < 1) throw std::invalid_argument("q must be at least 1");
  if (q > 120) throw std::invalid_argument("q too large");
  const NiceDecomposition nice = nice_decomposition(g, td);
  std::vector<Table<Partition>> tables(nice.nodes.size());
  std::size_t used = 0;

  for (std::size_t i = 0; i < nice.nodes.size(); ++i) {
    const NiceNode& nd = nice.nodes[i];
    auto& t = tables[i];
    switch (nd.kind) {
      case NiceNode::Kind::Leaf:
        t.add(Partition{}, {-1, -1}, used, limits.dp_states);
        break;
      case NiceNode::Kind::Introduce: {
        const int c = nd.children[0];
        const VertexSet& cb = nice.nodes[static_cast<std::size_t>(c)].bag;
        const std::size_t p = position(nd.bag, nd.vertex);
        const auto& ct = tables[static_cast<std::size_t>(c)];
        for (std::size_t j = 0; j < ct.keys.size(); ++j) {
          const Partition& s = ct.keys[j];
          const int k = block_count(s);
          std::vector<char> blocked(static_cast<std::size_t>(k) + 1, 0);
          for (std::size_t x = 0; x < cb.size(); ++x)
            if (g.adjacent(cb[x], nd.vertex)) blocked[static_cast<std::size_t>(s[x])] = 1;
          for (int b = 0; b <= k && b < q; ++b) {
            if (blocked[static_cast<std::size_t>(b)]) continue;
            Partition r = s;
            r.insert(r.begin() + static_cast<std::ptrdiff_t>(p), static_cast<char>(b));
            normalize(r);
            t.add(r, {static_cast<int>(j), -1}, used, limits.dp_states);
          }
        }
        break;
      }
      case NiceNode::Kind::Forget: {
        const int c = nd.children[0];
        const std::size_t p = position(nice.nodes[static_cast<std::size_t>(c)].bag, nd.vertex);
        const auto& ct = tables[static_cast<std::size_t>(c)];
        for (std::size_t j = 0; j < ct.keys.size(); ++j) {
          Partition r = ct.keys[j];
          r.erase(r.begin() + static_cast<std::ptrdiff_t>(p));
          normalize(r);
          t.add(r, {static_cast<int>(j), -1}, used, limits.dp_states);
        }
        break;
      }
      case NiceNode::Kind::Join: {
        const auto& l = tables[static_cast<std::size_t>(nd.children[0])];
        const auto& r = tables[static_cast<std::size_t>(nd.children[1])];
        for (std::size_t j = 0; j < l.keys.size(); ++j) {
          auto it = r.index.find(l.keys[j]);
          if (it != r.index.end()) t.add(l.keys[j], {static_cast<int>(j), it->second}, used, limits.dp_states);
        }
        break;
      }
    }
  }

  const auto& root = tables[static_cast<std::size_t>(nice.root)];
  if (root.keys.empty()) return std::nullopt;

  Coloring color(static_cast<std::size_t>(g.n()), 0);
  std::vector<std::pair<int, int>> stack{{nice.root, 0}};
  while (!stack.empty()) {
    auto [node, s] = stack.back();
    stack.pop_back();
    const NiceNode& nd = nice.nodes[static_cast<std::size_t>(node)];
    const auto back = tables[static_cast<std::size_t>(node)].back[static_cast<std::size_t>(s)];
    switch (nd.kind) {
      case NiceNode::Kind::Leaf:
        break;
      case NiceNode::Kind::Introduce:
        stack.push_back({nd.children[0], back.first});
        break;
      case NiceNode::Kind::Forget: {
        const int c = nd.children[0];
        const VertexSet& cb = nice.nodes[static_cast<std::size_t>(c)].bag;
        const Partition& cs = tables[static_cast<std::size_t>(c)].keys[static_cast<std::size_t>(back.first)];
        const std::size_t p = position(cb, nd.vertex);
        int chosen = 0;
        for (std::size_t x = 0; x < cb.size(); ++x)
          if (x != p && cs[x] == cs[p]) chosen = color[static_cast<std::size_t>(cb[x])];
        if (chosen == 0) {
          std::vector<char> taken(static_cast<std::size_t>(q) + 2, 0);
          for (Vertex u : nd.bag) taken[static_cast<std::size_t>(color[static_cast<std::size_t>(u)])] = 1;
          chosen = 1;
          while (taken[static_cast<std::size_t>(chosen)]) ++chosen;
        }
        color[static_cast<std::size_t>(nd.vertex)] = chosen;
        stack.push_back({c, back.first});
        break;
      }
      case NiceNode::Kind::Join:
        stack.push_back({nd.children[0], back.first});
        stack.push_back({nd.children[1], back.second});
        break;
    }
  }
  return color;
}

Coloring combine_colorings(const Graph& g, const DecompositionTree& tree, const std::vector<Coloring>& atom_colorings,
                           int q) {
  const auto leaves = tree.leaves();
  if (leaves.size() != atom_colorings.size()) throw std::invalid_argument("one coloring per atom is required");
  std::vector<int> slot(tree.nodes.size(), -1);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    slot[static_cast<std::size_t>(leaves[i])] = static_cast<int>(i);
    const auto& verts = tree.nodes[static_cast<std::size_t>(leaves[i])].vertices;
    const auto& c = atom_colorings[i];
    if (c.size() != verts.size()) throw std::invalid_argument("atom coloring has the wrong size");
    for (int x : c)
      if (x < 1 || x > q) throw std::invalid_argument("atom coloring exceeds q colors");
    if (!is_proper_coloring(induced_subgraph(g, verts).graph, c)) throw std::invalid_argument("atom coloring is not proper");
  }
  const std::size_t n = static_cast<std::size_t>(g.n());
  std::function<Coloring(int)> rec = [&](int t) {
    const auto& nd = tree.nodes[static_cast<std::size_t>(t)];
    Coloring col(n, 0);
    if (nd.is_leaf()) {
      const auto& c = atom_colorings[static_cast<std::size_t>(slot[static_cast<std::size_t>(t)])];
      for (std::size_t i = 0; i < nd.vertices.size(); ++i) col[static_cast<std::size_t>(nd.vertices[i])] = c[i];
      return col;
    }
    const Coloring a = rec(nd.left);
    const Coloring b = rec(nd.right);
    std::vector<int> perm(static_cast<std::size_t>(q) + 1, 0);
    std::vector<char> taken(static_cast<std::size_t>(q) + 1, 0);
    for (Vertex k : nd.cutset) {
      perm[static_cast<std::size_t>(b[static_cast<std::size_t>(k)])] = a[static_cast<std::size_t>(k)];
      taken[static_cast<std::size_t>(a[static_cast<std::size_t>(k)])] = 1;
    }
    int free_color = 1;
    for (int c = 1; c <= q; ++c) {
      if (perm[static_cast<std::size_t>(c)] != 0) continue;
      while (taken[static_cast<std::size_t>(free_color)]) ++free_color;
      perm[static_cast<std::size_t>(c)] = free_color;
      taken[static_cast<std::size_t>(free_color)] = 1;
    }
    for (Vertex v : tree.nodes[static_cast<std::size_t>(nd.right)].vertices)
      col[static_cast<std::size_t>(v)] = perm[static_cast<std::size_t>(b[static_cast<std::size_t>(v)])];
    for (Vertex v : tree.nodes[static_cast<std::size_t>(nd.left)].vertices) col[static_cast<std::size_t>(v)] = a[static_cast<std::size_t>(v)];
    return col;
  };
  if (tree.nodes.empty()) return {};
  return rec(0);
}

// ---- structure ----------------------------------------------------------

TreeDecomposition AtomStructure::atom_td() const {
  if (complete) {
    TreeDecomposition td;
    VertexSet all(vertices.size());
    std::iota(all.begin(), all.end(), 0);
    td.bags.push_back(all);
    return td;
  }
  return lift_tree_decomposition(*skeleton_td, *skeleton);
}

int AtomStructure::clique_number() const {
  return complete ? static_cast<int>(vertices.size()) : clique_number_via_skeleton(*skeleton);
}

VertexSet AtomStructure::max_clique() const {
  if (complete) {
    VertexSet all(vertices.size());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  const auto& sd = *skeleton;
  const auto& km = sd.clique_map;
  VertexSet best;
  auto consider = [&](std::size_t v, std::optional<std::size_t> w) {
    const std::size_t size = km[v].size() + (w ? km[*w].size() : 0);
    if (size <= best.size() && !best.empty()) return;
    best = km[v];
    if (w) best.insert(best.end(), km[*w].begin(), km[*w].end());
  };
  for (Vertex v = 0; v < sd.skeleton.n(); ++v) {
    consider(static_cast<std::size_t>(v), std::nullopt);
    for (Vertex w : sd.skeleton.neighbors(v))
      if (w > v) consider(static_cast<std::size_t>(v), static_cast<std::size_t>(w));
  }
  best.insert(best.end(), sd.universal.begin(), sd.universal.end());
  std::sort(best.begin(), best.end());
  return best;
}

bool StructureAnalysis::all_structured() const {
  return std::all_of(atoms.begin(), atoms.end(), [](const AtomStructure& a) { return a.structured(); });
}

StructureAnalysis analyze_structure(const Graph& g, const Limits& limits) {
  StructureAnalysis out;
  out.tree = clique_cutset_tree(g);
  for (int leaf : out.tree.leaves()) {
    AtomStructure a;
    a.vertices = out.tree.nodes[static_cast<std::size_t>(leaf)].vertices;
    a.graph = induced_subgraph(g, a.vertices).graph;
    const auto r = extract_skeleton(a.graph);
    if (std::holds_alternative<CompleteAtom>(r)) {
      a.complete = true;
    } else if (const auto* sd = std::get_if<SkeletonDecomposition>(&r)) {
      a.skeleton = *sd;
      auto st = skeleton_tree_decomposition(sd->skeleton, limits);
      if (st.status == SkeletonTreewidth::Status::Ok) a.skeleton_td = std::move(st.td);
    }
    out.atoms.push_back(std::move(a));
  }
  return out;
}

// ---- chromatic number and clique number --------------------------------

ChromaticOutcome chromatic_number(const Graph& g, const Limits& limits) {
  ChromaticOutcome out;
  if (g.n() == 0) {
    out.ok = true;
    out.method = "structural";
    return out;
  }
  const auto an = analyze_structure(g, limits);
  std::vector<Coloring> colorings;
  bool any_structural = false, any_brute = false;
  for (const auto& a : an.atoms) {
    std::optional<Coloring> c;
    if (a.complete) {
      c = Coloring(a.vertices.size());
      std::iota(c->begin(), c->end(), 1);
    } else if (a.structured()) {
      try {
        const auto td = a.atom_td();
        for (int q = a.clique_number(); !c; ++q) c = q_color(a.graph, td, q, limits);
      } catch (const BudgetExceeded&) {
        c.reset();
      }
    }
    if (c) {
      any_structural = true;
    } else {
      try {
        c = brute_chromatic(a.graph, limits).coloring;
        any_brute = true;
      } catch (const BudgetExceeded& e) {
        out.reason = std::string("atom of ") + std::to_string(a.vertices.size()) + " vertices without usable structure: " + e.what();
        return out;
      }
    }
    out.chi = std::max(out.chi, color_count(*c));
    colorings.push_back(std::move(*c));
  }
  out.coloring = combine_colorings(g, an.tree, colorings, out.chi);
  out.ok = true;
  out.method = any_brute ? (any_structural ? "mixed" : "brute-force") : "structural";
  return out;
}

CliqueOutcome clique_number(const Graph& g, const Limits& limits) {
  CliqueOutcome out;
  if (g.n() == 0) {
    out.ok = true;
    out.method = "structural";
    return out;
  }
  const auto an = analyze_structure(g, limits);
  bool brute = false;
  for (const auto& a : an.atoms) {
    VertexSet local;
    if (a.complete || a.skeleton) {
      local = a.max_clique();
    } else {
      try {
        local = brute_max_clique(a.graph, limits);
        brute = true;
      } catch (const BudgetExceeded& e) {
        out.reason = e.what();
        return out;
      }
    }
    if (local.size() > out.clique.size()) {
      out.clique.clear();
      for (Vertex v : local) out.clique.push_back(a.vertices[static_cast<std::size_t>(v)]);
      std::sort(out.clique.begin(), out.clique.end());
    }
  }
  out.ok = true;
  out.method = brute ? "mixed" : "structural";
  return out;
}

// ---- maximum weight stable set ------------------------------------------

SkeletonWeights reduce_to_skeleton_weights(const Graph& atom, const SkeletonDecomposition& sd, const std::vector<Weight>& w) {
  if (static_cast<int>(w.size()) != atom.n() || sd.atom_n != atom.n()) throw std::invalid_argument("weights do not match the atom");
  const int f = sd.skeleton.n();
  const bool hub = !sd.universal.empty();
  GraphBuilder b(f + (hub ? 1 : 0));
  for (auto [u, v] : sd.skeleton.edges()) b.add_edge(u, v);
  SkeletonWeights out;
  auto best_of = [&](const VertexSet& cls) {
    Vertex best = cls.front();
    for (Vertex v : cls)
      if (w[static_cast<std::size_t>(v)] > w[static_cast<std::size_t>(best)]) best = v;
    return best;
  };
  for (int i = 0; i < f; ++i) {
    const Vertex v = best_of(sd.clique_map[static_cast<std::size_t>(i)]);
    out.chosen.push_back(v);
    b.set_weight(i, w[static_cast<std::size_t>(v)]);
  }
  if (hub) {
    for (int i = 0; i < f; ++i) b.add_edge(i, f);
    const Vertex u = best_of(sd.universal);
    out.chosen.push_back(u);
    b.set_weight(f, w[static_cast<std::size_t>(u)]);
  }
  out.graph = std::move(b).build();
  return out;
}

StableSetResult mwss_tree_dp(const Graph& g, const TreeDecomposition& td, const std::vector<Weight>& w) {
  const NiceDecomposition nice = nice_decomposition(g, td);
  if (nice.width() > 62) throw BudgetExceeded("bag too large for the stable set dynamic program");
  using Mask = std::uint64_t;
  struct Entry {
    std::vector<Mask> keys;
    std::vector<Weight> value;
    std::vector<std::pair<int, int>> back;
    std::unordered_map<Mask, int> index;
    void offer(Mask m, Weight v, std::pair<int, int> b) {
      auto [it, fresh] = index.emplace(m, static_cast<int>(keys.size()));
      if (fresh) {
        keys.push_back(m);
        value.push_back(v);
        back.push_back(b);
      } else if (v > value[static_cast<std::size_t>(it->second)]) {
        value[static_cast<std::size_t>(it->second)] = v;
        back[static_cast<std::size_t>(it->second)] = b;
      }
    }
  };
  auto wt = [&](Vertex v) { return w[static_cast<std::size_t>(v)]; };
  std::vector<Entry> tab(nice.nodes.size());
  for (std::size_t i = 0; i < nice.nodes.size(); ++i) {
    const NiceNode& nd = nice.nodes[i];
    auto& t = tab[i];
    switch (nd.kind) {
      case NiceNode::Kind::Leaf:
        t.offer(0, 0, {-1, -1});
        break;
      case NiceNode::Kind::Introduce: {
        const auto& ct = tab[static_cast<std::size_t>(nd.children[0])];
        const std::size_t p = position(nd.bag, nd.vertex);
        Mask nbr = 0;
        for (std::size_t x = 0; x < nd.bag.size(); ++x)
          if (g.adjacent(nd.bag[x], nd.vertex)) nbr |= Mask{1} << x;
        const Mask low = (Mask{1} << p) - 1;
        for (std::size_t j = 0; j < ct.keys.size(); ++j) {
          const Mask m = (ct.keys[j] & low) | ((ct.keys[j] & ~low) << 1);
          t.offer(m, ct.value[j], {static_cast<int>(j), 0});
          if (!(m & nbr)) t.offer(m | (Mask{1} << p), ct.value[j] + wt(nd.vertex), {static_cast<int>(j), 1});
        }
        break;
      }
      case NiceNode::Kind::Forget: {
        const auto& ct = tab[static_cast<std::size_t>(nd.children[0])];
        const std::size_t p = position(nice.nodes[static_cast<std::size_t>(nd.children[0])].bag, nd.vertex);
        const Mask low = (Mask{1} << p) - 1;
        for (std::size_t j = 0; j < ct.keys.size(); ++j) {
          const Mask m = (ct.keys[j] & low) | ((ct.keys[j] >> (p + 1)) << p);
          t.offer(m, ct.value[j], {static_cast<int>(j), -1});
        }
        break;
      }
      case NiceNode::Kind::Join: {
        const auto& l = tab[static_cast<std::size_t>(nd.children[0])];
        const auto& r = tab[static_cast<std::size_t>(nd.children[1])];
        for (std::size_t j = 0; j < l.keys.size(); ++j) {
          auto it = r.index.find(l.keys[j]);
          if (it == r.index.end()) continue;
          Weight shared = 0;
          for (std::size_t x = 0; x < nd.bag.size(); ++x)
            if (l.keys[j] >> x & 1u) shared += wt(nd.bag[x]);
          t.offer(l.keys[j], l.value[j] + r.value[static_cast<std::size_t>(it->second)] - shared, {static_cast<int>(j), it->second});
        }
        break;
      }
    }
  }

  StableSetResult res;
  res.weight = tab[static_cast<std::size_t>(nice.root)].value.at(0);
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  std::vector<std::pair<int, int>> stack{{nice.root, 0}};
  while (!stack.empty()) {
    auto [node, s] = stack.back();
    stack.pop_back();
    const NiceNode& nd = nice.nodes[static_cast<std::size_t>(node)];
    const auto b = tab[static_cast<std::size_t>(node)].back[static_cast<std::size_t>(s)];
    const Mask m = tab[static_cast<std::size_t>(node)].keys[static_cast<std::size_t>(s)];
    for (std::size_t x = 0; x < nd.bag.size(); ++x)
      if (m >> x & 1u) in[static_cast<std::size_t>(nd.bag[x])] = 1;
    if (nd.kind == NiceNode::Kind::Join) {
      stack.push_back({nd.children[0], b.first});
      stack.push_back({nd.children[1], b.second});
    } else if (nd.kind != NiceNode::Kind::Leaf) {
      stack.push_back({nd.children[0], b.first});
    }
  }
  for (Vertex v = 0; v < g.n(); ++v)
    if (in[static_cast<std::size_t>(v)]) res.set.push_back(v);
  return res;
}

namespace {

class MwssSolver {
 public:
  MwssSolver(const Graph& g, const StructureAnalysis& an, const Limits& limits, MwssStats& stats)
      : g_(g), an_(an), limits_(limits), stats_(stats), leaf_atom_(an.tree.nodes.size(), -1) {
    const auto leaves = an.tree.leaves();
    for (std::size_t i = 0; i < leaves.size(); ++i) leaf_atom_[static_cast<std::size_t>(leaves[i])] = static_cast<int>(i);
  }

  VertexSet solve(int t, const std::vector<Weight>& w) {
    const auto& nd = an_.tree.nodes[static_cast<std::size_t>(t)];
    if (nd.is_leaf()) return subproblem(leaf_atom_[static_cast<std::size_t>(t)], nd.vertices, w);
    if (nd.cutset.empty()) return merged(solve(nd.left, w), solve(nd.right, w));

    const int a = leaf_atom_[static_cast<std::size_t>(nd.left)];
    const VertexSet& atom = an_.tree.nodes[static_cast<std::size_t>(nd.left)].vertices;
    const VertexSet& s = nd.cutset;
    VertexSet outside_s;
    std::set_difference(atom.begin(), atom.end(), s.begin(), s.end(), std::back_inserter(outside_s));
    const VertexSet i_prime = subproblem(a, outside_s, w);
    const Weight w_prime = total(i_prime, w);

    std::vector<Weight> w2 = w;
    std::vector<VertexSet> i_v;
    for (Vertex v : s) {
      const VertexSet nv = g_.closed_neighborhood(v);
      VertexSet rest;
      std::set_difference(atom.begin(), atom.end(), nv.begin(), nv.end(), std::back_inserter(rest));
      i_v.push_back(subproblem(a, rest, w));
      w2[static_cast<std::size_t>(v)] = w[static_cast<std::size_t>(v)] + total(i_v.back(), w) - w_prime;
      ++stats_.reweighted;
      if (w2[static_cast<std::size_t>(v)] > w[static_cast<std::size_t>(v)]) ++stats_.reweight_violations;
    }
    const VertexSet i2 = solve(nd.right, w2);
    VertexSet hit;
    std::set_intersection(i2.begin(), i2.end(), s.begin(), s.end(), std::back_inserter(hit));
    if (hit.size() == 1) {
      const auto k = static_cast<std::size_t>(std::lower_bound(s.begin(), s.end(), hit[0]) - s.begin());
      return merged(i_v[k], i2);
    }
    return merged(i_prime, i2);
  }

 private:
  static Weight total(const VertexSet& s, const std::vector<Weight>& w) {
    Weight t = 0;
    for (Vertex v : s) t += w[static_cast<std::size_t>(v)];
    return t;
  }

  static VertexSet merged(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  // Maximum weight stable set of g[x], x a subset of atom `a`.
  VertexSet subproblem(int a, const VertexSet& x, const std::vector<Weight>& w) {
    if (x.empty()) return {};
    const AtomStructure& at = an_.atoms[static_cast<std::size_t>(a)];
    VertexSet local;  // positions of x inside the atom
    for (Vertex v : x) local.push_back(static_cast<Vertex>(std::lower_bound(at.vertices.begin(), at.vertices.end(), v) - at.vertices.begin()));
    std::vector<Weight> wx;
    for (Vertex v : x) wx.push_back(w[static_cast<std::size_t>(v)]);

    if (at.complete) {
      ++stats_.structural_subproblems;
      std::size_t best = 0;
      for (std::size_t i = 1; i < x.size(); ++i)
        if (wx[i] > wx[best]) best = i;
      return wx[best] > 0 ? VertexSet{x[best]} : VertexSet{};
    }

    const Graph sub = induced_subgraph(at.graph, local).graph.with_weights(wx);
    if (at.structured()) {
      const VertexSet removed = complement_of(at.graph, local);
      const SkeletonDecomposition rsd = restrict_skeleton(*at.skeleton, removed);
      if (is_skeleton_of(rsd, sub)) {
        ++stats_.structural_subproblems;
        VertexSet kept;
        std::vector<char> gone(at.vertices.size(), 0);
        for (Vertex v : removed) gone[static_cast<std::size_t>(v)] = 1;
        for (std::size_t i = 0; i < at.skeleton->clique_map.size(); ++i)
          for (Vertex v : at.skeleton->clique_map[i])
            if (!gone[static_cast<std::size_t>(v)]) {
              kept.push_back(static_cast<Vertex>(i));
              break;
            }
        TreeDecomposition td = restrict_decomposition(*at.skeleton_td, kept, at.skeleton->skeleton.n());
        const SkeletonWeights sw = reduce_to_skeleton_weights(sub, rsd, wx);
        if (!rsd.universal.empty()) {
          const Vertex hub = rsd.skeleton.n();
          for (auto& bag : td.bags) bag.push_back(hub);
          if (td.bags.empty()) td.bags.push_back({hub});
        }
        const auto res = mwss_tree_dp(sw.graph, td, sw.graph.weights());
        VertexSet out;
        for (Vertex v : res.set) out.push_back(x[static_cast<std::size_t>(sw.chosen[static_cast<std::size_t>(v)])]);
        std::sort(out.begin(), out.end());
        return out;
      }
      ++stats_.restriction_violations;
    }
    ++stats_.brute_subproblems;
    VertexSet out;
    for (Vertex v : brute_mwss(sub, limits_).set) out.push_back(x[static_cast<std::size_t>(v)]);
    return out;
  }

  const Graph& g_;
  const StructureAnalysis& an_;
  const Limits& limits_;
  MwssStats& stats_;
  std::vector<int> leaf_atom_;
};

}  // namespace

MwssOutcome mwss(const Graph& g, const Limits& limits) {
  MwssOutcome out;
  if (g.n() == 0) {
    out.ok = true;
    return out;
  }
  const auto an = analyze_structure(g, limits);
  try {
    MwssSolver solver(g, an, limits, out.stats);
    out.result.set = solver.solve(0, g.weights());
  } catch (const BudgetExceeded& e) {
    out.reason = e.what();
    return out;
  }
  for (Vertex v : out.result.set) out.result.weight += g.weight(v);
  out.ok = true;
  return out;
}

}  // namespace cehf
