#include "cehf/skeleton.hpp"

#include <algorithm>

#include "cehf/decomposition.hpp"

namespace cehf {

std::vector<VertexSet> twin_classes(const Graph& g) {
  const int n = g.n();
  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  std::vector<int> split_to(1, -1);
  std::vector<int> touched;
  int classes = n > 0 ? 1 : 0;
  for (Vertex v = 0; v < n; ++v) {
    auto move = [&](Vertex u) {
      const int c = cls[static_cast<std::size_t>(u)];
      if (split_to[static_cast<std::size_t>(c)] < 0) {
        split_to[static_cast<std::size_t>(c)] = classes++;
        split_to.push_back(-1);
        touched.push_back(c);
      }
      cls[static_cast<std::size_t>(u)] = split_to[static_cast<std::size_t>(c)];
    };
    move(v);
    for (Vertex u : g.neighbors(v)) move(u);
    for (int c : touched) split_to[static_cast<std::size_t>(c)] = -1;
    touched.clear();
  }
  std::vector<int> slot(static_cast<std::size_t>(classes), -1);
  std::vector<VertexSet> out;
  for (Vertex v = 0; v < n; ++v) {
    int& s = slot[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])];
    if (s < 0) {
      s = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(s)].push_back(v);
  }
  return out;
}

VertexSet SkeletonDecomposition::representatives() const {
  VertexSet r;
  for (const auto& k : clique_map) r.push_back(k.front());
  return r;
}

SkeletonResult extract_skeleton(const Graph& atom) {
  const int n = atom.n();
  if (atom.m() == static_cast<std::size_t>(n) * static_cast<std::size_t>(std::max(n - 1, 0)) / 2) return CompleteAtom{};

  SkeletonDecomposition sd;
  sd.atom_n = n;
  VertexSet rest;
  for (Vertex v = 0; v < n; ++v) (atom.degree(v) == n - 1 ? sd.universal : rest).push_back(v);
  const auto sub = induced_subgraph(atom, rest);
  for (const auto& c : twin_classes(sub.graph)) {
    VertexSet k;
    for (Vertex v : c) k.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
    sd.clique_map.push_back(std::move(k));
  }
  sd.skeleton = induced_subgraph(atom, sd.representatives()).graph.without_weights();

  const Graph& f = sd.skeleton;
  for (Vertex a = 0; a < f.n(); ++a)
    for (Vertex b : f.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : f.neighbors(b))
        if (c > b && f.adjacent(a, c)) return SkeletonReject{SkeletonReject::Reason::Triangle, {a, b, c}, sd};
    }
  if (auto k = find_clique_cutset(f)) return SkeletonReject{SkeletonReject::Reason::CliqueCutset, k->cutset, sd};
  return sd;
}

int clique_number_via_skeleton(const SkeletonDecomposition& sd) {
  auto size = [&](Vertex v) { return static_cast<int>(sd.clique_map[static_cast<std::size_t>(v)].size()); };
  int best = 0;
  for (Vertex v = 0; v < sd.skeleton.n(); ++v) {
    best = std::max(best, size(v));
    for (Vertex w : sd.skeleton.neighbors(v)) best = std::max(best, size(v) + size(w));
  }
  return static_cast<int>(sd.universal.size()) + best;
}

Graph reconstruct_atom(const SkeletonDecomposition& sd) {
  std::vector<int> sizes;
  VertexSet label;
  for (const auto& k : sd.clique_map) {
    sizes.push_back(static_cast<int>(k.size()));
    label.insert(label.end(), k.begin(), k.end());
  }
  label.insert(label.end(), sd.universal.begin(), sd.universal.end());
  const Graph g = add_universal_clique(blow_up(sd.skeleton, sizes), static_cast<int>(sd.universal.size()));
  GraphBuilder b(sd.atom_n);
  for (auto [u, v] : g.edges()) b.add_edge(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
  return std::move(b).build();
}

SkeletonDecomposition restrict_skeleton(const SkeletonDecomposition& sd, const VertexSet& removed) {
  const int n = sd.atom_n;
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (Vertex v : removed) gone[static_cast<std::size_t>(v)] = 1;
  std::vector<int> new_id(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (Vertex v = 0; v < n; ++v)
    if (!gone[static_cast<std::size_t>(v)]) new_id[static_cast<std::size_t>(v)] = next++;

  SkeletonDecomposition out;
  out.atom_n = next;
  VertexSet kept;
  for (std::size_t i = 0; i < sd.clique_map.size(); ++i) {
    VertexSet k;
    for (Vertex v : sd.clique_map[i])
      if (!gone[static_cast<std::size_t>(v)]) k.push_back(new_id[static_cast<std::size_t>(v)]);
    if (k.empty()) continue;
    kept.push_back(static_cast<Vertex>(i));
    out.clique_map.push_back(std::move(k));
  }
  for (Vertex v : sd.universal)
    if (!gone[static_cast<std::size_t>(v)]) out.universal.push_back(new_id[static_cast<std::size_t>(v)]);
  out.skeleton = induced_subgraph(sd.skeleton, kept).graph;
  return out;
}

bool is_skeleton_of(const SkeletonDecomposition& sd, const Graph& g) {
  if (g.n() != sd.atom_n || static_cast<int>(sd.clique_map.size()) != sd.skeleton.n()) return false;
  std::vector<int> owner(static_cast<std::size_t>(g.n()), -2);
  for (Vertex u : sd.universal) {
    if (g.degree(u) != g.n() - 1) return false;
    owner[static_cast<std::size_t>(u)] = -1;
  }
  for (std::size_t i = 0; i < sd.clique_map.size(); ++i)
    for (Vertex v : sd.clique_map[i]) {
      if (owner[static_cast<std::size_t>(v)] != -2) return false;
      owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  for (int o : owner)
    if (o == -2) return false;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v) {
      const int a = owner[static_cast<std::size_t>(u)], b = owner[static_cast<std::size_t>(v)];
      const bool expect = a < 0 || b < 0 || a == b || sd.skeleton.adjacent(a, b);
      if (g.adjacent(u, v) != expect) return false;
    }
  return true;
}

}  // namespace cehf
