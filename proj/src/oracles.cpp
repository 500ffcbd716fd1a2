#include "cehf/oracles.hpp"

#include <algorithm>
#include <bit>
#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <numeric>
#include <queue>

namespace cehf {

// ---- chordless cycles ---------------------------------------------------

namespace {

class CycleSearch {
 public:
  CycleSearch(const Graph& g, int min_len, int max_len, const std::function<bool(const Cycle&)>& visit,
              const Limits& limits)
      : g_(g),
        min_len_(min_len),
        max_len_(max_len),
        visit_(visit),
        limits_(limits),
        adjcnt_(static_cast<std::size_t>(g.n()), 0),
        onpath_(static_cast<std::size_t>(g.n()), 0) {}

  bool run() {
    for (start_ = 0; start_ < g_.n(); ++start_) {
      path_.assign(1, start_);
      onpath_[static_cast<std::size_t>(start_)] = 1;
      for (Vertex p1 : g_.neighbors(start_)) {
        if (p1 <= start_) continue;
        if (max_len_ < 3) break;
        push(p1);
        const bool cont = extend();
        pop();
        if (!cont) return false;
      }
      onpath_[static_cast<std::size_t>(start_)] = 0;
    }
    return true;
  }

 private:
  void push(Vertex x) {
    path_.push_back(x);
    onpath_[static_cast<std::size_t>(x)] = 1;
    for (Vertex u : g_.neighbors(x)) ++adjcnt_[static_cast<std::size_t>(u)];
  }
  void pop() {
    const Vertex x = path_.back();
    path_.pop_back();
    onpath_[static_cast<std::size_t>(x)] = 0;
    for (Vertex u : g_.neighbors(x)) --adjcnt_[static_cast<std::size_t>(u)];
  }

  // adjcnt_[x] counts path vertices other than the start adjacent to x, so a
  // candidate extension must have adjcnt_ exactly 1 (the current end).
  bool extend() {
    const Vertex last = path_.back();
    for (Vertex x : g_.neighbors(last)) {
      if (x <= start_ || onpath_[static_cast<std::size_t>(x)] || adjcnt_[static_cast<std::size_t>(x)] != 1) continue;
      if (++steps_ > limits_.max_search_steps) throw BudgetExceeded("chordless-cycle search step budget exceeded");
      if (g_.adjacent(x, start_)) {
        const int len = static_cast<int>(path_.size()) + 1;
        if (len >= min_len_ && len <= max_len_ && path_[1] < x) {
          path_.push_back(x);
          const bool cont = visit_(path_);
          path_.pop_back();
          if (!cont) return false;
        }
        continue;
      }
      if (static_cast<int>(path_.size()) + 2 > max_len_) continue;
      push(x);
      const bool cont = extend();
      pop();
      if (!cont) return false;
    }
    return true;
  }

  const Graph& g_;
  int min_len_, max_len_;
  const std::function<bool(const Cycle&)>& visit_;
  const Limits& limits_;
  std::vector<int> adjcnt_;
  std::vector<char> onpath_;
  std::vector<Vertex> path_;
  Vertex start_ = 0;
  std::size_t steps_ = 0;
};

void guard_cycle_oracle(const Graph& g, const Limits& limits) {
  if (g.n() > limits.cycle_oracle_max_n)
    throw BudgetExceeded("graph has " + std::to_string(g.n()) + " vertices; cycle oracles are limited to " +
                         std::to_string(limits.cycle_oracle_max_n));
}

}  // namespace

bool for_each_chordless_cycle(const Graph& g, int min_len, int max_len,
                              const std::function<bool(const Cycle&)>& visit, const Limits& limits) {
  guard_cycle_oracle(g, limits);
  CycleSearch search(g, std::max(min_len, 3), max_len, visit, limits);
  return search.run();
}

std::vector<Cycle> enumerate_chordless_cycles(const Graph& g, std::optional<int> max_len, const Limits& limits) {
  std::vector<Cycle> out;
  for_each_chordless_cycle(g, 3, max_len.value_or(g.n()), [&](const Cycle& c) {
    out.push_back(c);
    return true;
  }, limits);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cycle> enumerate_holes(const Graph& g, const Limits& limits) {
  std::vector<Cycle> out;
  for_each_chordless_cycle(g, 4, g.n(), [&](const Cycle& c) {
    out.push_back(c);
    return true;
  }, limits);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- odd signings -------------------------------------------------------

namespace {

struct EdgeIndex {
  int n;
  std::vector<int> id;
  explicit EdgeIndex(const Graph& g) : n(g.n()), id(static_cast<std::size_t>(g.n()) * static_cast<std::size_t>(g.n()), -1) {
    int k = 0;
    for (auto [u, v] : g.edges()) {
      id[static_cast<std::size_t>(u * n + v)] = k;
      id[static_cast<std::size_t>(v * n + u)] = k;
      ++k;
    }
  }
  int operator()(Vertex u, Vertex v) const { return id[static_cast<std::size_t>(u * n + v)]; }
};

}  // namespace

std::optional<Signing> odd_signable_signing(const Graph& g, const Limits& limits) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  const EdgeIndex eid(g);
  using Row = boost::dynamic_bitset<>;
  std::vector<std::optional<Row>> basis(m);  // basis[c]: row whose lowest set column is c
  bool consistent = true;

  for_each_chordless_cycle(g, 3, g.n(), [&](const Cycle& c) {
    Row row(m + 1);
    for (std::size_t i = 0; i < c.size(); ++i) row.flip(static_cast<std::size_t>(eid(c[i], c[(i + 1) % c.size()])));
    row.set(m);  // right-hand side: odd
    for (;;) {
      const std::size_t col = row.find_first();
      if (col >= m) {
        if (col == m) consistent = false;  // 0 = 1
        break;
      }
      if (!basis[col]) {
        basis[col] = std::move(row);
        break;
      }
      row ^= *basis[col];
    }
    return consistent;
  }, limits);
  if (!consistent) return std::nullopt;

  Signing s{edges, std::vector<unsigned char>(m, 0)};
  for (std::size_t c = m; c-- > 0;) {
    if (!basis[c]) continue;
    const Row& r = *basis[c];
    bool val = r.test(m);
    for (std::size_t j = r.find_next(c); j < m; j = r.find_next(j)) val ^= s.value[j] != 0;
    s.value[c] = val ? 1 : 0;
  }
  return s;
}

bool verify_signing(const Graph& g, const Signing& s, const Limits& limits) {
  if (s.edges != g.edges() || s.value.size() != s.edges.size()) return false;
  const EdgeIndex eid(g);
  return for_each_chordless_cycle(g, 3, g.n(), [&](const Cycle& c) {
    int parity = 0;
    for (std::size_t i = 0; i < c.size(); ++i) parity ^= s.value[static_cast<std::size_t>(eid(c[i], c[(i + 1) % c.size()]))];
    return parity == 1;
  }, limits);
}

// ---- forbidden induced structures ---------------------------------------

namespace {

// For a hole H: per vertex outside H, the positions of its neighbours on H.
struct HoleAttachments {
  std::vector<int> pos;                        // position on H, or -1
  std::vector<std::vector<int>> attach;        // per vertex: sorted H positions adjacent to it
  HoleAttachments(const Graph& g, const Cycle& h)
      : pos(static_cast<std::size_t>(g.n()), -1), attach(static_cast<std::size_t>(g.n())) {
    for (std::size_t i = 0; i < h.size(); ++i) pos[static_cast<std::size_t>(h[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < h.size(); ++i)
      for (Vertex u : g.neighbors(h[i]))
        if (pos[static_cast<std::size_t>(u)] < 0) attach[static_cast<std::size_t>(u)].push_back(static_cast<int>(i));
  }
  bool outside(Vertex v) const { return pos[static_cast<std::size_t>(v)] < 0; }
  const std::vector<int>& of(Vertex v) const { return attach[static_cast<std::size_t>(v)]; }
};

// Shortest path from any source to any vertex adjacent to the target set,
// moving only through vertices accepted by `inner`. Sources must themselves be
// accepted by `is_source`. Returns the path of inner vertices (sources first),
// ascending-id BFS order for determinism.
template <typename IsSource, typename Inner, typename IsEnd>
std::vector<Vertex> bfs_path(const Graph& g, IsSource is_source, Inner inner, IsEnd is_end) {
  std::vector<int> parent(static_cast<std::size_t>(g.n()), -2);
  std::queue<Vertex> q;
  for (Vertex v = 0; v < g.n(); ++v)
    if (is_source(v)) {
      parent[static_cast<std::size_t>(v)] = -1;
      q.push(v);
    }
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    if (is_end(v)) {
      std::vector<Vertex> path;
      for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Vertex u : g.neighbors(v))
      if (parent[static_cast<std::size_t>(u)] == -2 && inner(u)) {
        parent[static_cast<std::size_t>(u)] = v;
        q.push(u);
      }
  }
  return {};
}

std::optional<ForbiddenWitness> theta_on_hole(const Graph& g, const Cycle& h) {
  const HoleAttachments at(g, h);
  const int k = static_cast<int>(h.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      const Vertex x = h[static_cast<std::size_t>(i)], y = h[static_cast<std::size_t>(j)];
      auto allowed = [&](Vertex v) {
        if (!at.outside(v)) return false;
        for (int p : at.of(v))
          if (p != i && p != j) return false;
        return true;
      };
      auto path = bfs_path(
          g, [&](Vertex v) { return allowed(v) && g.adjacent(v, x); }, allowed,
          [&](Vertex v) { return g.adjacent(v, y); });
      if (path.empty()) continue;
      ForbiddenWitness w{ForbiddenKind::Theta, {x, y}};
      for (int p = i + 1; p < j; ++p) w.vertices.push_back(h[static_cast<std::size_t>(p)]);
      for (int p = i - 1 + k; p > j; --p) w.vertices.push_back(h[static_cast<std::size_t>(p % k)]);
      w.vertices.insert(w.vertices.end(), path.begin(), path.end());
      return w;
    }
  return std::nullopt;
}

std::optional<ForbiddenWitness> prism_on_hole(const Graph& g, const Cycle& h) {
  const HoleAttachments at(g, h);
  const int k = static_cast<int>(h.size());
  auto attached_exactly = [&](Vertex v, int a, int b) {
    const auto& p = at.of(v);
    return at.outside(v) && p.size() == 2 && ((p[0] == a && p[1] == b) || (p[0] == b && p[1] == a));
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 2; j < k; ++j) {
      const int i1 = (i + 1) % k, j1 = (j + 1) % k;
      if (j1 == i) continue;  // edges share a vertex
      auto path = bfs_path(
          g, [&](Vertex v) { return attached_exactly(v, i, i1); },
          [&](Vertex v) { return at.outside(v) && at.of(v).empty(); },
          [&](Vertex v) {
            for (Vertex u : g.neighbors(v))
              if (attached_exactly(u, j, j1)) return true;
            return false;
          });
      if (path.empty()) continue;
      Vertex y3 = -1;
      for (Vertex u : g.neighbors(path.back()))
        if (attached_exactly(u, j, j1)) {
          y3 = u;
          break;
        }
      const Vertex x1 = h[static_cast<std::size_t>(i1)], x2 = h[static_cast<std::size_t>(i)];
      const Vertex y1 = h[static_cast<std::size_t>(j)], y2 = h[static_cast<std::size_t>(j1)];
      ForbiddenWitness w{ForbiddenKind::Prism, {x1, x2, path.front(), y1, y2, y3}};
      for (int p = i1 + 1; p < j; ++p) w.vertices.push_back(h[static_cast<std::size_t>(p)]);
      for (int p = i - 1 + k; p > j + 1; --p) w.vertices.push_back(h[static_cast<std::size_t>(p % k)]);
      w.vertices.insert(w.vertices.end(), path.begin() + 1, path.end());
      return w;
    }
  return std::nullopt;
}

}  // namespace

std::optional<ForbiddenWitness> find_forbidden_induced(const Graph& g, ForbiddenKind kind, const Limits& limits) {
  if (kind == ForbiddenKind::Triangle) {
    for (Vertex u = 0; u < g.n(); ++u)
      for (Vertex v : g.neighbors(u)) {
        if (v <= u) continue;
        for (Vertex w : g.neighbors(v))
          if (w > v && g.adjacent(u, w)) return ForbiddenWitness{kind, {u, v, w}};
      }
    return std::nullopt;
  }

  std::optional<ForbiddenWitness> found;
  const int min_len = 4;
  const int max_len = kind == ForbiddenKind::FourHole ? 4 : g.n();
  for_each_chordless_cycle(g, min_len, max_len, [&](const Cycle& h) {
    switch (kind) {
      case ForbiddenKind::FourHole:
        found = ForbiddenWitness{kind, h};
        break;
      case ForbiddenKind::EvenHole:
        if (h.size() % 2 == 0) found = ForbiddenWitness{kind, h};
        break;
      case ForbiddenKind::Cap:
      case ForbiddenKind::EvenWheel: {
        const HoleAttachments at(g, h);
        const int k = static_cast<int>(h.size());
        for (Vertex x = 0; x < g.n() && !found; ++x) {
          if (!at.outside(x)) continue;
          const auto& p = at.of(x);
          const int cnt = static_cast<int>(p.size());
          const bool hit = kind == ForbiddenKind::Cap
                               ? (cnt == 2 && (p[1] - p[0] == 1 || (p[0] == 0 && p[1] == k - 1)))
                               : (cnt >= 4 && cnt % 2 == 0);
          if (hit) {
            found = ForbiddenWitness{kind, h};
            found->vertices.push_back(x);
          }
        }
        break;
      }
      case ForbiddenKind::Theta:
        found = theta_on_hole(g, h);
        break;
      case ForbiddenKind::Prism:
        found = prism_on_hole(g, h);
        break;
      case ForbiddenKind::Triangle:
        break;
    }
    return !found.has_value();
  }, limits);
  return found;
}

// ---- exact solvers ------------------------------------------------------

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

void guard(const Graph& g, int limit, const char* what) {
  if (g.n() > limit || g.n() > 64)
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(g.n()) + " vertices exceeds the brute-force limit of " +
                         std::to_string(std::min(limit, 64)));
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.n()), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= bit(v);
    adj[static_cast<std::size_t>(v)] |= bit(u);
  }
  return adj;
}

// Branch and bound for a maximum weight set pairwise non-adjacent in `adj`.
class StableSetSearch {
 public:
  StableSetSearch(std::vector<Mask> adj, std::vector<Weight> w) : adj_(std::move(adj)), w_(std::move(w)) {}

  std::pair<Mask, Weight> run() {
    Mask cand = 0;
    for (std::size_t v = 0; v < w_.size(); ++v)
      if (w_[v] > 0) cand |= bit(static_cast<int>(v));
    rec(cand, 0, 0);
    return {best_set_, best_};
  }

 private:
  void rec(Mask cand, Mask cur, Weight cur_w) {
    if (cur_w > best_) {
      best_ = cur_w;
      best_set_ = cur;
    }
    if (cand == 0) return;
    Weight bound = cur_w;
    for (Mask c = cand; c; c &= c - 1) bound += w_[static_cast<std::size_t>(std::countr_zero(c))];
    if (bound <= best_) return;
    // Branch on the candidate with most candidate neighbours (lowest id on ties).
    int pick = -1, pick_deg = -1;
    for (Mask c = cand; c; c &= c - 1) {
      const int v = std::countr_zero(c);
      const int d = std::popcount(adj_[static_cast<std::size_t>(v)] & cand);
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    if (pick_deg == 0) {
      Mask all = cur;
      Weight tot = cur_w;
      for (Mask c = cand; c; c &= c - 1) {
        all |= c & (~c + 1);
        tot += w_[static_cast<std::size_t>(std::countr_zero(c))];
      }
      if (tot > best_) {
        best_ = tot;
        best_set_ = all;
      }
      return;
    }
    const Mask rest = cand & ~bit(pick);
    rec(rest & ~adj_[static_cast<std::size_t>(pick)], cur | bit(pick), cur_w + w_[static_cast<std::size_t>(pick)]);
    rec(rest, cur, cur_w);
  }

  std::vector<Mask> adj_;
  std::vector<Weight> w_;
  Weight best_ = 0;
  Mask best_set_ = 0;
};

VertexSet mask_to_set(Mask m) {
  VertexSet out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k) : g_(g), k_(k), color_(static_cast<std::size_t>(g.n()), 0) {
    order_.resize(static_cast<std::size_t>(g.n()));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }
  bool run() { return rec(0, 0); }
  const Coloring& coloring() const { return color_; }

 private:
  bool rec(std::size_t idx, int used) {
    if (idx == order_.size()) return true;
    const Vertex v = order_[idx];
    const int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      bool ok = true;
      for (Vertex u : g_.neighbors(v))
        if (color_[static_cast<std::size_t>(u)] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color_[static_cast<std::size_t>(v)] = c;
      if (rec(idx + 1, std::max(used, c))) return true;
      color_[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<Vertex> order_;
  Coloring color_;
};

}  // namespace

ChromaticResult brute_chromatic(const Graph& g, const Limits& limits) {
  guard(g, limits.chromatic_max_n, "brute chromatic");
  if (g.n() == 0) return {0, {}};
  const int lower = static_cast<int>(brute_max_clique(g, Limits::uniform(64)).size());
  for (int k = std::max(1, lower);; ++k) {
    ColoringSearch s(g, k);
    if (s.run()) return {k, s.coloring()};
  }
}

StableSetResult brute_mwss(const Graph& g, const Limits& limits) {
  guard(g, limits.mwss_max_n, "brute mwss");
  StableSetSearch s(adjacency_masks(g), g.weights());
  auto [set, w] = s.run();
  return {mask_to_set(set), w};
}

VertexSet brute_max_clique(const Graph& g, const Limits& limits) {
  guard(g, limits.clique_max_n, "brute max-clique");
  auto adj = adjacency_masks(g);
  const Mask all = g.n() == 64 ? ~Mask{0} : bit(g.n()) - 1;
  for (std::size_t v = 0; v < adj.size(); ++v) adj[v] = all & ~adj[v] & ~bit(static_cast<int>(v));
  StableSetSearch s(std::move(adj), std::vector<Weight>(static_cast<std::size_t>(g.n()), 1));
  return mask_to_set(s.run().first);
}

std::optional<VertexSet> brute_clique_cutset(const Graph& g, const Limits& limits) {
  guard(g, limits.cutset_max_n, "brute clique-cutset");
  const auto adj = adjacency_masks(g);
  const int n = g.n();
  const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
  auto disconnected_without = [&](Mask removed) {
    const Mask rest = all & ~removed;
    if (rest == 0) return false;
    Mask seen = rest & (~rest + 1), frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      next &= rest & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen != rest;
  };
  std::optional<VertexSet> found;
  // Cliques of size `size` in lexicographic order.
  std::function<bool(int, int, Mask, Mask)> rec = [&](int size, int from, Mask cur, Mask common) {
    if (std::popcount(cur) == size) {
      if (disconnected_without(cur)) {
        found = mask_to_set(cur);
        return true;
      }
      return false;
    }
    for (int v = from; v < n; ++v)
      if (common & bit(v))
        if (rec(size, v + 1, cur | bit(v), common & adj[static_cast<std::size_t>(v)])) return true;
    return false;
  };
  for (int size = 0; size <= n; ++size)
    if (rec(size, 0, 0, all)) return found;
  return std::nullopt;
}

std::vector<VertexSet> twin_classes_pairwise(const Graph& g) {
  std::vector<int> cls(static_cast<std::size_t>(g.n()), -1);
  std::vector<VertexSet> out;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (cls[static_cast<std::size_t>(u)] >= 0) continue;
    cls[static_cast<std::size_t>(u)] = static_cast<int>(out.size());
    out.push_back({u});
    const auto nu = g.closed_neighborhood(u);
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (cls[static_cast<std::size_t>(v)] < 0 && g.closed_neighborhood(v) == nu) {
        cls[static_cast<std::size_t>(v)] = cls[static_cast<std::size_t>(u)];
        out.back().push_back(v);
      }
  }
  return out;
}

Certificate brute_solve(const Graph& g, BruteProblem problem, const Limits& limits) {
  Certificate c;
  c.problem = problem;
  switch (problem) {
    case BruteProblem::Chromatic: {
      auto r = brute_chromatic(g, limits);
      c.value = r.chi;
      c.coloring = std::move(r.coloring);
      break;
    }
    case BruteProblem::Mwss: {
      auto r = brute_mwss(g, limits);
      c.value = r.weight;
      c.set = std::move(r.set);
      break;
    }
    case BruteProblem::MaxClique:
      c.set = brute_max_clique(g, limits);
      c.value = static_cast<Weight>(c.set.size());
      break;
    case BruteProblem::CliqueCutset: {
      auto r = brute_clique_cutset(g, limits);
      c.none = !r.has_value();
      if (r) {
        c.set = std::move(*r);
        c.value = static_cast<Weight>(c.set.size());
      }
      break;
    }
  }
  return c;
}

}  // namespace cehf
