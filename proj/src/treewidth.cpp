#include "cehf/treewidth.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "cehf/oracles.hpp"

namespace cehf {

using Bits = boost::dynamic_bitset<>;

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

bool is_valid_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int n = g.n();
  const int nb = static_cast<int>(td.bags.size());
  if (nb == 0) return n == 0 && td.edges.empty();
  for (const auto& b : td.bags) {
    if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end()) return false;
    for (Vertex v : b)
      if (v < 0 || v >= n) return false;
  }
  if (static_cast<int>(td.edges.size()) != nb - 1) return false;
  std::vector<int> parent(static_cast<std::size_t>(nb));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  for (auto [a, b] : td.edges) {
    if (a < 0 || b < 0 || a >= nb || b >= nb) return false;
    const int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    parent[static_cast<std::size_t>(ra)] = rb;
  }

  std::vector<Bits> holds(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(nb)));
  for (int i = 0; i < nb; ++i)
    for (Vertex v : td.bags[static_cast<std::size_t>(i)]) holds[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(i));
  for (Vertex v = 0; v < n; ++v)
    if (holds[static_cast<std::size_t>(v)].none()) return false;
  for (auto [u, v] : g.edges())
    if (!holds[static_cast<std::size_t>(u)].intersects(holds[static_cast<std::size_t>(v)])) return false;
  std::vector<int> inner(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : td.edges) {
    const auto& ba = td.bags[static_cast<std::size_t>(a)];
    for (Vertex v : ba)
      if (holds[static_cast<std::size_t>(v)].test(static_cast<std::size_t>(b))) ++inner[static_cast<std::size_t>(v)];
  }
  for (Vertex v = 0; v < n; ++v)
    if (inner[static_cast<std::size_t>(v)] != static_cast<int>(holds[static_cast<std::size_t>(v)].count()) - 1) return false;
  return true;
}

namespace {

std::vector<Bits> adjacency_bits(const Graph& g) {
  std::vector<Bits> adj(static_cast<std::size_t>(g.n()), Bits(static_cast<std::size_t>(g.n())));
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    adj[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
  }
  return adj;
}

std::vector<Vertex> members(const Bits& b) {
  std::vector<Vertex> out;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(static_cast<Vertex>(i));
  return out;
}

}  // namespace

std::vector<Vertex> min_fill_ordering(const Graph& g) {
  const int n = g.n();
  auto adj = adjacency_bits(g);
  Bits alive(static_cast<std::size_t>(n));
  alive.set();
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    long best_fill = 0;
    std::size_t best_deg = 0;
    for (auto vi = alive.find_first(); vi != Bits::npos; vi = alive.find_next(vi)) {
      const auto nb = members(adj[vi]);
      long fill = 0;
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
          if (!adj[static_cast<std::size_t>(nb[i])].test(static_cast<std::size_t>(nb[j]))) ++fill;
      if (best < 0 || fill < best_fill || (fill == best_fill && nb.size() < best_deg)) {
        best = static_cast<Vertex>(vi);
        best_fill = fill;
        best_deg = nb.size();
      }
    }
    const auto nb = members(adj[static_cast<std::size_t>(best)]);
    for (Vertex a : nb) {
      adj[static_cast<std::size_t>(a)] |= adj[static_cast<std::size_t>(best)];
      adj[static_cast<std::size_t>(a)].reset(static_cast<std::size_t>(a));
      adj[static_cast<std::size_t>(a)].reset(static_cast<std::size_t>(best));
    }
    alive.reset(static_cast<std::size_t>(best));
    order.push_back(best);
  }
  return order;
}

TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.n();
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("ordering must list every vertex once");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] >= 0) throw std::invalid_argument("ordering must list every vertex once");
    pos[static_cast<std::size_t>(v)] = i;
  }
  auto adj = adjacency_bits(g);
  TreeDecomposition td;
  td.bags.resize(static_cast<std::size_t>(n));
  int last_root = -1;
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[static_cast<std::size_t>(i)];
    const auto nb = members(adj[static_cast<std::size_t>(v)]);
    VertexSet bag = nb;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[static_cast<std::size_t>(i)] = bag;
    for (Vertex a : nb) {
      adj[static_cast<std::size_t>(a)] |= adj[static_cast<std::size_t>(v)];
      adj[static_cast<std::size_t>(a)].reset(static_cast<std::size_t>(a));
      adj[static_cast<std::size_t>(a)].reset(static_cast<std::size_t>(v));
    }
    if (nb.empty()) {
      if (last_root >= 0) td.edges.push_back({last_root, i});
      last_root = i;
    } else {
      int parent = n;
      for (Vertex a : nb) parent = std::min(parent, pos[static_cast<std::size_t>(a)]);
      td.edges.push_back({i, parent});
    }
  }
  return td;
}

TreeDecomposition compress(const TreeDecomposition& td) {
  const std::size_t nb = td.bags.size();
  std::vector<std::vector<int>> adj(nb);
  for (auto [a, b] : td.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<char> alive(nb, 1);
  auto subset = [&](int a, int b) {
    const auto& x = td.bags[static_cast<std::size_t>(a)];
    const auto& y = td.bags[static_cast<std::size_t>(b)];
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < nb; ++a) {
      if (!alive[a]) continue;
      for (int b : adj[a]) {
        if (!subset(static_cast<int>(a), b)) continue;
        // Merge a into b.
        alive[a] = 0;
        for (int c : adj[a]) {
          auto& ac = adj[static_cast<std::size_t>(c)];
          ac.erase(std::remove(ac.begin(), ac.end(), static_cast<int>(a)), ac.end());
          if (c != b) {
            ac.push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(c);
          }
        }
        adj[a].clear();
        changed = true;
        break;
      }
    }
  }
  std::vector<int> id(nb, -1);
  TreeDecomposition out;
  for (std::size_t a = 0; a < nb; ++a)
    if (alive[a]) {
      id[a] = static_cast<int>(out.bags.size());
      out.bags.push_back(td.bags[a]);
    }
  for (std::size_t a = 0; a < nb; ++a)
    for (int b : adj[a])
      if (alive[a] && static_cast<int>(a) < b) out.edges.push_back({id[a], id[static_cast<std::size_t>(b)]});
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

namespace {

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::vector<Bits::block_type> blocks;
    boost::to_block_range(b, std::back_inserter(blocks));
    std::size_t h = b.size();
    for (auto x : blocks) h ^= std::hash<Bits::block_type>()(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class ExactSearch {
 public:
  ExactSearch(const Graph& g, int k, const Limits& limits) : g_(g), k_(k), limits_(limits), adj_(adjacency_bits(g)) {}

  std::optional<std::vector<Vertex>> run() {
    Bits eliminated(static_cast<std::size_t>(g_.n()));
    if (dfs(eliminated)) return order_;
    return std::nullopt;
  }

 private:
  // Vertices outside S + v reachable from v through S.
  int q_size(const Bits& s, Vertex v) const {
    Bits seen(static_cast<std::size_t>(g_.n()));
    Bits frontier(static_cast<std::size_t>(g_.n()));
    frontier.set(static_cast<std::size_t>(v));
    seen.set(static_cast<std::size_t>(v));
    Bits reach(static_cast<std::size_t>(g_.n()));
    while (frontier.any()) {
      Bits next(static_cast<std::size_t>(g_.n()));
      for (auto i = frontier.find_first(); i != Bits::npos; i = frontier.find_next(i)) next |= adj_[i];
      next -= seen;
      seen |= next;
      reach |= next - s;
      frontier = next & s;
    }
    return static_cast<int>(reach.count());
  }

  bool dfs(Bits& s) {
    const int remaining = g_.n() - static_cast<int>(s.count());
    if (remaining <= k_ + 1) {
      for (Vertex v = 0; v < g_.n(); ++v)
        if (!s.test(static_cast<std::size_t>(v))) order_.push_back(v);
      return true;
    }
    if (failed_.count(s)) return false;
    if (++nodes_ > limits_.exact_tw_nodes) throw BudgetExceeded("exact treewidth search node budget exceeded");
    std::vector<std::pair<int, Vertex>> cand;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (s.test(static_cast<std::size_t>(v))) continue;
      const int q = q_size(s, v);
      if (q <= k_) cand.push_back({q, v});
    }
    std::sort(cand.begin(), cand.end());
    if (!cand.empty() && cand.front().first <= 1) cand.resize(1);  // simplicial, always safe
    for (auto [q, v] : cand) {
      s.set(static_cast<std::size_t>(v));
      order_.push_back(v);
      if (dfs(s)) return true;
      order_.pop_back();
      s.reset(static_cast<std::size_t>(v));
    }
    failed_.insert(s);
    return false;
  }

  const Graph& g_;
  int k_;
  const Limits& limits_;
  std::vector<Bits> adj_;
  std::unordered_set<Bits, BitsHash> failed_;
  std::vector<Vertex> order_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::optional<std::vector<Vertex>> exact_ordering_within(const Graph& g, int k, const Limits& limits) {
  if (k < 0) return g.n() == 0 ? std::optional<std::vector<Vertex>>(std::vector<Vertex>{}) : std::nullopt;
  return ExactSearch(g, k, limits).run();
}

TreeDecomposition heuristic_tree_decomposition(const Graph& g) {
  return compress(decomposition_from_ordering(g, min_fill_ordering(g)));
}

SkeletonTreewidth skeleton_tree_decomposition(const Graph& f, const Limits& limits) {
  SkeletonTreewidth out;
  if (auto tri = find_forbidden_induced(f, ForbiddenKind::Triangle)) {
    out.status = SkeletonTreewidth::Status::Rejected;
    out.triangle = tri;
    out.reason = "skeleton contains a triangle";
    return out;
  }
  out.td = heuristic_tree_decomposition(f);
  if (out.td.width() <= 5) {
    out.status = SkeletonTreewidth::Status::Ok;
    return out;
  }
  out.exact_search = true;
  try {
    auto order = exact_ordering_within(f, 5, limits);
    if (!order) {
      out.status = SkeletonTreewidth::Status::Rejected;
      out.td = {};
      out.reason = "treewidth exceeds 5";
      return out;
    }
    out.td = compress(decomposition_from_ordering(f, *order));
    out.status = SkeletonTreewidth::Status::Ok;
  } catch (const BudgetExceeded& e) {
    out.status = SkeletonTreewidth::Status::Undecided;
    out.td = {};
    out.reason = e.what();
  }
  return out;
}

std::vector<Vertex> mcs_elimination_order(const Graph& g) {
  const int n = g.n();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<char> done(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> visit;
  for (int i = 0; i < n; ++i) {
    Vertex v = -1;
    for (Vertex u = 0; u < n; ++u)
      if (!done[static_cast<std::size_t>(u)] && (v < 0 || weight[static_cast<std::size_t>(u)] > weight[static_cast<std::size_t>(v)])) v = u;
    done[static_cast<std::size_t>(v)] = 1;
    visit.push_back(v);
    for (Vertex u : g.neighbors(v)) ++weight[static_cast<std::size_t>(u)];
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

bool is_chordal(const Graph& g) {
  const auto order = mcs_elimination_order(g);
  std::vector<int> pos(static_cast<std::size_t>(g.n()));
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  for (Vertex v : order) {
    Vertex first = -1;
    for (Vertex u : g.neighbors(v))
      if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)] &&
          (first < 0 || pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(first)]))
        first = u;
    if (first < 0) continue;
    for (Vertex u : g.neighbors(v))
      if (u != first && pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)] && !g.adjacent(u, first)) return false;
  }
  return true;
}

TreeDecomposition clique_tree(const Graph& g) {
  return compress(decomposition_from_ordering(g, mcs_elimination_order(g)));
}

Graph triangulation_from_ears(const Graph& f, const EarSequence& es, const Limits& limits) {
  const auto check = validate_ear_sequence(f, es, limits);
  if (check.status != EarStatus::Good) throw std::invalid_argument("invalid ear sequence: " + check.reason);
  GraphBuilder b(f.n());
  for (auto [u, v] : f.edges()) b.add_edge(u, v);
  const Vertex u = es.base[0], v = es.base[1];
  for (Vertex w : es.base) {
    if (w != u) b.add_edge(u, w);
    if (w != v) b.add_edge(v, w);
  }
  for (const auto& ear : es.ears) {
    for (std::size_t i = 1; i + 1 < ear.path.size(); ++i)
      for (Vertex s : {ear.x(), ear.apex, ear.z()}) b.add_edge(s, ear.path[i]);
    b.add_edge(ear.x(), ear.z());
  }
  return std::move(b).build();
}

TreeDecomposition lift_tree_decomposition(const TreeDecomposition& td, const SkeletonDecomposition& sd) {
  if (!is_valid_decomposition(sd.skeleton, td)) throw std::invalid_argument("decomposition does not match the skeleton");
  TreeDecomposition out;
  out.edges = td.edges;
  for (const auto& bag : td.bags) {
    VertexSet lifted = sd.universal;
    for (Vertex v : bag) {
      const auto& k = sd.clique_map[static_cast<std::size_t>(v)];
      lifted.insert(lifted.end(), k.begin(), k.end());
    }
    std::sort(lifted.begin(), lifted.end());
    out.bags.push_back(std::move(lifted));
  }
  if (out.bags.empty() && sd.atom_n > 0) out.bags.push_back(sd.universal);
  return out;
}

TreeDecomposition restrict_decomposition(const TreeDecomposition& td, const VertexSet& keep, int n) {
  std::vector<int> id(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) id[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  TreeDecomposition out;
  out.edges = td.edges;
  for (const auto& bag : td.bags) {
    VertexSet b;
    for (Vertex v : bag)
      if (id[static_cast<std::size_t>(v)] >= 0) b.push_back(id[static_cast<std::size_t>(v)]);
    out.bags.push_back(std::move(b));
  }
  if (keep.empty()) out = {};
  return out;
}

int NiceDecomposition::width() const {
  int w = -1;
  for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()) - 1);
  return w;
}

TreeDecomposition NiceDecomposition::as_tree_decomposition() const {
  TreeDecomposition td;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    td.bags.push_back(nodes[i].bag);
    for (int c : nodes[i].children) td.edges.push_back({c, static_cast<int>(i)});
  }
  return td;
}

namespace {

class NiceBuilder {
 public:
  NiceBuilder(const TreeDecomposition& td, NiceDecomposition& out) : td_(td), out_(out), adj_(td.bags.size()) {
    for (auto [a, b] : td.edges) {
      adj_[static_cast<std::size_t>(a)].push_back(b);
      adj_[static_cast<std::size_t>(b)].push_back(a);
    }
  }

  int build(int t, int parent) {
    const VertexSet& bag = td_.bags[static_cast<std::size_t>(t)];
    std::vector<int> tops;
    for (int c : adj_[static_cast<std::size_t>(t)]) {
      if (c == parent) continue;
      int x = build(c, t);
      x = transition(x, bag);
      tops.push_back(x);
    }
    if (tops.empty()) return transition(add({NiceNode::Kind::Leaf, {}, -1, {}}), bag);
    int x = tops[0];
    for (std::size_t i = 1; i < tops.size(); ++i) x = add({NiceNode::Kind::Join, bag, -1, {x, tops[i]}});
    return x;
  }

  // Forgets then introduces vertices (ascending) until the bag equals target.
  int transition(int x, const VertexSet& target) {
    VertexSet cur = out_.nodes[static_cast<std::size_t>(x)].bag;
    VertexSet drop, gain;
    std::set_difference(cur.begin(), cur.end(), target.begin(), target.end(), std::back_inserter(drop));
    std::set_difference(target.begin(), target.end(), cur.begin(), cur.end(), std::back_inserter(gain));
    for (Vertex v : drop) {
      cur.erase(std::find(cur.begin(), cur.end(), v));
      x = add({NiceNode::Kind::Forget, cur, v, {x}});
    }
    for (Vertex v : gain) {
      cur.insert(std::upper_bound(cur.begin(), cur.end(), v), v);
      x = add({NiceNode::Kind::Introduce, cur, v, {x}});
    }
    return x;
  }

  int add(NiceNode nd) {
    out_.nodes.push_back(std::move(nd));
    return static_cast<int>(out_.nodes.size()) - 1;
  }

 private:
  const TreeDecomposition& td_;
  NiceDecomposition& out_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

NiceDecomposition nice_decomposition(const Graph& g, const TreeDecomposition& td) {
  if (!is_valid_decomposition(g, td)) throw std::invalid_argument("invalid tree decomposition");
  NiceDecomposition out;
  const TreeDecomposition c = compress(td);
  NiceBuilder b(c, out);
  if (c.bags.empty()) {
    out.root = b.add({NiceNode::Kind::Leaf, {}, -1, {}});
    return out;
  }
  out.root = b.transition(b.build(0, -1), {});
  return out;
}

}  // namespace cehf
