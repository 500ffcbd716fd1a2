#include "cehf/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/pending/disjoint_sets.hpp>

#include "cehf/decomposition.hpp"
#include "cehf/oracles.hpp"
#include "cehf/rng.hpp"

namespace cehf {

void GeneratorParams::validate() const {
  if (ear_count < 0 || max_blowup < 0 || max_universal < 0 || glue_count < 0 || max_vertices < 0 || base_length < 0)
    throw std::invalid_argument("generator bounds must be nonnegative");
  if (max_ear_length < 2) throw std::invalid_argument("max ear length must be at least 2");
  if (base_length != 0 && base_length < 5) throw std::invalid_argument("base hole length must be at least 5");
}

namespace {

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(v.size()) - 1))];
}

bool triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      a[i] < b[j] ? ++i : ++j;
    }
  }
  return true;
}

}  // namespace

SkeletonSample random_skeleton(const GeneratorParams& p, const Limits& limits) {
  p.validate();
  Rng rng(p.seed);
  const bool ehf = p.target == GraphClass::CapEvenHoleFree;
  int base = p.base_length;
  if (base == 0) {
    base = ehf ? (rng.coin() ? 5 : 7) : static_cast<int>(rng.uniform_int(5, 8));
    if (base > p.max_vertices) base = std::max(5, ehf ? p.max_vertices - (p.max_vertices + 1) % 2 : p.max_vertices);
  }
  if (ehf && base % 2 == 0) throw std::invalid_argument("even-hole-free skeletons need an odd base hole");

  SkeletonSample out;
  out.skeleton = make_hole(base);
  for (int i = 0; i < base; ++i) out.ears.base.push_back(i);

  const std::vector<int> gap_choices = ehf ? std::vector<int>{3, 5} : std::vector<int>{3, 4, 5};
  std::vector<Cycle> holes = enumerate_holes(out.skeleton, limits);
  const int max_attempts = 40 * p.ear_count + 40;
  while (static_cast<int>(out.ears.ears.size()) < p.ear_count && out.attempts < max_attempts) {
    ++out.attempts;
    const Graph& g = out.skeleton;
    const int n = g.n();
    const Cycle& h = pick(rng, holes);
    const auto k = static_cast<std::int64_t>(h.size());
    const auto i = rng.uniform_int(0, k - 1);
    Ear ear;
    ear.host = h;
    ear.apex = h[static_cast<std::size_t>(i)];
    const Vertex x = h[static_cast<std::size_t>((i + k - 1) % k)];
    const Vertex z = h[static_cast<std::size_t>((i + 1) % k)];

    // y gets an odd number of interior neighbours, consecutive ones at least 3 apart.
    const int inner = rng.uniform_int(0, 3) == 0 ? 3 : 1;
    std::vector<int> gaps;
    for (int j = 0; j <= inner; ++j) gaps.push_back(pick(rng, gap_choices));
    const int length = std::accumulate(gaps.begin(), gaps.end(), 0);
    if (length > p.max_ear_length || n + length - 1 > p.max_vertices) continue;

    GraphBuilder b(n + length - 1);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    ear.path.push_back(x);
    for (int j = 0; j < length - 1; ++j) ear.path.push_back(n + j);
    ear.path.push_back(z);
    for (std::size_t j = 0; j + 1 < ear.path.size(); ++j) b.add_edge(ear.path[j], ear.path[j + 1]);
    for (int j = 0, at = 0; j < inner; ++j) {
      at += gaps[static_cast<std::size_t>(j)];
      b.add_edge(ear.apex, ear.path[static_cast<std::size_t>(at)]);
    }
    Graph next = std::move(b).build();

    if (validate_good_ear(next, n, ear, limits).status != EarStatus::Good) continue;
    if (!triangle_free(next) || detect_4hole(next) || find_clique_cutset(next)) continue;
    if (ehf && find_forbidden_induced(next, ForbiddenKind::EvenHole, limits)) continue;
    out.skeleton = std::move(next);
    out.ears.ears.push_back(std::move(ear));
    holes = enumerate_holes(out.skeleton, limits);
  }
  return out;
}

GlueResult glue_atoms(const std::vector<Graph>& atoms, const std::vector<GlueJoint>& joints) {
  const std::size_t a = atoms.size();
  std::vector<std::size_t> offset(a + 1, 0);
  for (std::size_t i = 0; i < a; ++i) offset[i + 1] = offset[i] + static_cast<std::size_t>(atoms[i].n());
  const std::size_t total = offset[a];

  std::vector<std::size_t> rank_a(a), parent_a(a), rank_v(total), parent_v(total);
  boost::disjoint_sets<std::size_t*, std::size_t*> atom_sets(rank_a.data(), parent_a.data());
  boost::disjoint_sets<std::size_t*, std::size_t*> vertex_sets(rank_v.data(), parent_v.data());
  for (std::size_t i = 0; i < a; ++i) atom_sets.make_set(i);
  for (std::size_t i = 0; i < total; ++i) vertex_sets.make_set(i);

  for (const auto& j : joints) {
    if (j.atom < 0 || j.partner < 0 || static_cast<std::size_t>(j.atom) >= a || static_cast<std::size_t>(j.partner) >= a)
      throw std::invalid_argument("joint refers to a missing atom");
    const Graph& ga = atoms[static_cast<std::size_t>(j.atom)];
    const Graph& gb = atoms[static_cast<std::size_t>(j.partner)];
    if (j.clique.size() != j.partner_clique.size()) throw std::invalid_argument("joint cliques differ in size");
    for (Vertex v : j.clique)
      if (v < 0 || v >= ga.n()) throw std::invalid_argument("joint vertex out of range");
    for (Vertex v : j.partner_clique)
      if (v < 0 || v >= gb.n()) throw std::invalid_argument("joint vertex out of range");
    if (!ga.is_clique(j.clique) || !gb.is_clique(j.partner_clique)) throw std::invalid_argument("joint set is not a clique");
    const auto ra = atom_sets.find_set(static_cast<std::size_t>(j.atom));
    const auto rb = atom_sets.find_set(static_cast<std::size_t>(j.partner));
    if (ra == rb) throw std::invalid_argument("joints form a cycle over the atoms");
    atom_sets.link(ra, rb);
    for (std::size_t k = 0; k < j.clique.size(); ++k)
      vertex_sets.union_set(offset[static_cast<std::size_t>(j.atom)] + static_cast<std::size_t>(j.clique[k]),
                            offset[static_cast<std::size_t>(j.partner)] + static_cast<std::size_t>(j.partner_clique[k]));
  }

  GlueResult out;
  std::vector<int> id_of_root(total, -1);
  int next = 0;
  for (std::size_t i = 0; i < a; ++i) {
    out.to_global.emplace_back();
    for (int v = 0; v < atoms[i].n(); ++v) {
      auto& id = id_of_root[vertex_sets.find_set(offset[i] + static_cast<std::size_t>(v))];
      if (id < 0) id = next++;
      out.to_global.back().push_back(id);
    }
  }
  GraphBuilder b(next);
  for (std::size_t i = 0; i < a; ++i)
    for (auto [u, v] : atoms[i].edges())
      b.add_edge(out.to_global[i][static_cast<std::size_t>(u)], out.to_global[i][static_cast<std::size_t>(v)]);
  out.graph = std::move(b).build();
  return out;
}

Instance generate_instance(const GeneratorParams& p, const Limits& limits) {
  p.validate();
  Instance inst;
  inst.params = p;
  Rng rng(derive_seed(p.seed, 0));
  const int atoms_wanted = p.glue_count + 1;
  int used = 0;
  std::vector<Graph> atoms;
  std::vector<std::vector<VertexSet>> classes;  // per atom: K_v blocks, then U when nonempty

  for (int a = 0; a < atoms_wanted; ++a) {
    const int room = p.max_vertices - used;
    const int share = room / (atoms_wanted - a);
    if (share < 5) break;
    AtomProvenance ap;
    ap.seed = derive_seed(p.seed, static_cast<std::uint64_t>(a) + 1);
    GeneratorParams sp = p;
    sp.seed = ap.seed;
    sp.max_vertices = share;
    ap.skeleton = random_skeleton(sp, limits);
    const Graph& f = ap.skeleton.skeleton;

    int budget = std::max(0, share - f.n());
    for (Vertex v = 0; v < f.n(); ++v) {
      int s = std::max(1, static_cast<int>(rng.uniform_int(1, std::max(1, p.max_blowup))));
      s = std::min(s, 1 + budget);
      budget -= s - 1;
      ap.blowup.push_back(s);
    }
    ap.universal = std::min(static_cast<int>(rng.uniform_int(0, p.max_universal)), budget);
    // A universal vertex keeps odd-signability only over an even-hole-free graph.
    if (ap.universal > 0 && p.target == GraphClass::CapFourHoleOddSignable &&
        find_forbidden_induced(f, ForbiddenKind::EvenHole, limits))
      ap.universal = 0;
    Graph atom = add_universal_clique(blow_up(f, ap.blowup), ap.universal);

    std::vector<VertexSet> cls;
    int start = 0;
    for (int s : ap.blowup) {
      cls.emplace_back(static_cast<std::size_t>(s));
      std::iota(cls.back().begin(), cls.back().end(), start);
      start += s;
    }
    if (ap.universal > 0) {
      cls.emplace_back(static_cast<std::size_t>(ap.universal));
      std::iota(cls.back().begin(), cls.back().end(), start);
    }
    int omega = 0;
    for (Vertex v = 0; v < f.n(); ++v) {
      omega = std::max(omega, ap.blowup[static_cast<std::size_t>(v)]);
      for (Vertex w : f.neighbors(v)) omega = std::max(omega, ap.blowup[static_cast<std::size_t>(v)] + ap.blowup[static_cast<std::size_t>(w)]);
    }
    ap.omega = omega + ap.universal;

    if (a > 0) {
      GlueJoint j;
      j.atom = a;
      j.partner = static_cast<int>(rng.uniform_int(0, a - 1));
      const VertexSet& mine = pick(rng, cls);
      const VertexSet& theirs = pick(rng, classes[static_cast<std::size_t>(j.partner)]);
      const auto size = rng.uniform_int(1, static_cast<std::int64_t>(std::min(mine.size(), theirs.size())));
      j.clique.assign(mine.begin(), mine.begin() + size);
      j.partner_clique.assign(theirs.begin(), theirs.begin() + size);
      used -= static_cast<int>(size);
      inst.joints.push_back(std::move(j));
    }
    used += atom.n();
    inst.expected_omega = std::max(inst.expected_omega, ap.omega);
    atoms.push_back(std::move(atom));
    classes.push_back(std::move(cls));
    inst.atoms.push_back(std::move(ap));
  }

  auto glued = glue_atoms(atoms, inst.joints);
  inst.graph = std::move(glued.graph);
  for (std::size_t i = 0; i < inst.atoms.size(); ++i) inst.atoms[i].to_global = std::move(glued.to_global[i]);
  return inst;
}

nlohmann::json provenance_json(const Instance& inst) {
  using nlohmann::json;
  const auto one_based = [](const std::vector<Vertex>& v) {
    json a = json::array();
    for (Vertex x : v) a.push_back(x + 1);
    return a;
  };
  const auto& p = inst.params;
  json out;
  out["params"] = {{"seed", p.seed},          {"ears", p.ear_count},           {"max_ear_length", p.max_ear_length},
                   {"max_blowup", p.max_blowup}, {"max_universal", p.max_universal}, {"glue", p.glue_count},
                   {"class", std::string(to_string(p.target))}, {"max_vertices", p.max_vertices}};
  out["n"] = inst.graph.n();
  out["m"] = inst.graph.m();
  out["expected_omega"] = inst.expected_omega;
  json atoms = json::array();
  for (const auto& a : inst.atoms) {
    json ears = json::array();
    for (const auto& e : a.skeleton.ears.ears)
      ears.push_back({{"host", one_based(e.host)}, {"path", one_based(e.path)}, {"apex", e.apex + 1}});
    atoms.push_back({{"seed", a.seed},
                     {"skeleton_n", a.skeleton.skeleton.n()},
                     {"base", one_based(a.skeleton.ears.base)},
                     {"ears", ears},
                     {"ear_attempts", a.skeleton.attempts},
                     {"blowup", a.blowup},
                     {"universal", a.universal},
                     {"omega", a.omega},
                     {"to_global", one_based(a.to_global)}});
  }
  out["atoms"] = atoms;
  json joints = json::array();
  for (const auto& j : inst.joints)
    joints.push_back({{"atom", j.atom + 1},
                      {"partner", j.partner + 1},
                      {"clique", one_based(j.clique)},
                      {"partner_clique", one_based(j.partner_clique)}});
  out["joints"] = joints;
  return out;
}

}  // namespace cehf
