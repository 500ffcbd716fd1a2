#include "cehf/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

#include "cehf/rng.hpp"

namespace cehf {

// ---- Graph --------------------------------------------------------------

void Graph::finalize() {
  const std::size_t n = adj_.size();
  const std::size_t words = (n + 63) / 64;
  rows_.assign(n, std::vector<std::uint64_t>(words, 0));
  m_ = 0;
  for (std::size_t v = 0; v < n; ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    for (Vertex u : nb) rows_[v][static_cast<std::size_t>(u) / 64] |= 1ULL << (u % 64);
    m_ += nb.size();
  }
  m_ /= 2;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::vector<Weight> weights) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (!weights.empty() && weights.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("weight vector size mismatch");
  Graph g;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw std::invalid_argument("duplicate edge");
  }
  g.weights_ = std::move(weights);
  g.finalize();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  return (rows_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1ULL;
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet out = neighbors(v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::vector<Weight> Graph::weights() const {
  if (!weights_.empty()) return weights_;
  return std::vector<Weight>(static_cast<std::size_t>(n()), 1);
}

Graph Graph::with_weights(std::vector<Weight> w) const {
  if (w.size() != static_cast<std::size_t>(n())) throw std::invalid_argument("weight vector size mismatch");
  Graph g = *this;
  g.weights_ = std::move(w);
  return g;
}

Graph Graph::without_weights() const {
  Graph g = *this;
  g.weights_.clear();
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_clique(std::span<const Vertex> s) const {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!adjacent(s[i], s[j])) return false;
  return true;
}

bool Graph::is_stable(std::span<const Vertex> s) const {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || adjacent(s[i], s[j])) return false;
  return true;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.adj_ == b.adj_ && a.weights() == b.weights();
}

// ---- GraphBuilder -------------------------------------------------------

GraphBuilder::GraphBuilder(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u)].push_back(v);
  adj_[static_cast<std::size_t>(v)].push_back(u);
}

void GraphBuilder::set_weight(Vertex v, Weight w) {
  if (weights_.empty()) weights_.assign(static_cast<std::size_t>(n_), 1);
  weights_.at(static_cast<std::size_t>(v)) = w;
}

Graph GraphBuilder::build() && {
  Graph g;
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  g.adj_ = std::move(adj_);
  g.weights_ = std::move(weights_);
  g.finalize();
  return g;
}

// ---- text format --------------------------------------------------------

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    std::size_t j = line.find(' ', i);
    if (j == std::string_view::npos) j = line.size();
    out.push_back(line.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
    throw ParseError(line_no, std::string("malformed ") + what + " '" + std::string(field) + "'");
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::optional<std::pair<int, std::size_t>> header;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_line;
  std::vector<std::pair<Vertex, Weight>> weight_lines;
  std::vector<std::size_t> weight_line_no;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') throw ParseError(line_no, "CR line ending");
    if (line.empty()) continue;
    if (line == "c" || line.starts_with("c ")) continue;
    auto fields = split_fields(line);
    const std::string_view tag = fields[0];
    if (tag == "p") {
      if (header) throw ParseError(line_no, "duplicate header");
      if (fields.size() != 3) throw ParseError(line_no, "malformed header");
      const int n = parse_number<int>(fields[1], line_no, "vertex count");
      const auto m = parse_number<std::size_t>(fields[2], line_no, "edge count");
      if (n < 0) throw ParseError(line_no, "malformed header");
      header.emplace(n, m);
    } else if (tag == "e" || tag == "w") {
      if (!header) throw ParseError(line_no, "record before header");
      if (fields.size() != 3) throw ParseError(line_no, std::string("malformed '") + std::string(tag) + "' line");
      const int n = header->first;
      const long long a = parse_number<long long>(fields[1], line_no, "vertex id");
      if (a < 1 || a > n) throw ParseError(line_no, "vertex id out of range: " + std::to_string(a));
      if (tag == "e") {
        const long long b = parse_number<long long>(fields[2], line_no, "vertex id");
        if (b < 1 || b > n) throw ParseError(line_no, "vertex id out of range: " + std::to_string(b));
        if (a == b) throw ParseError(line_no, "loop at vertex " + std::to_string(a));
        edges.emplace_back(static_cast<Vertex>(std::min(a, b) - 1), static_cast<Vertex>(std::max(a, b) - 1));
        edge_line.push_back(line_no);
      } else {
        if (fields[2].starts_with('-')) throw ParseError(line_no, "negative weight");
        const auto w = parse_number<Weight>(fields[2], line_no, "weight");
        weight_lines.emplace_back(static_cast<Vertex>(a - 1), w);
        weight_line_no.push_back(line_no);
      }
    } else {
      throw ParseError(line_no, "unknown record type '" + std::string(tag) + "'");
    }
  }
  if (!header) throw ParseError(0, "missing header 'p <n> <m>'");
  const int n = header->first;

  // Duplicate edges: report the line of the second occurrence.
  {
    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return edges[i] < edges[j]; });
    for (std::size_t k = 1; k < order.size(); ++k)
      if (edges[order[k]] == edges[order[k - 1]]) {
        const std::size_t line = std::max(edge_line[order[k]], edge_line[order[k - 1]]);
        throw ParseError(line, "duplicate edge " + std::to_string(edges[order[k]].first + 1) + " " +
                                   std::to_string(edges[order[k]].second + 1));
      }
  }
  if (edges.size() != header->second)
    throw ParseError(0, "header declares " + std::to_string(header->second) + " edges, found " +
                            std::to_string(edges.size()));

  std::vector<Weight> weights;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::size_t i = 0; i < weight_lines.size(); ++i) {
    auto [v, w] = weight_lines[i];
    if (weights.empty()) weights.assign(static_cast<std::size_t>(n), 1);
    if (seen[static_cast<std::size_t>(v)])
      throw ParseError(weight_line_no[i], "duplicate weight for vertex " + std::to_string(v + 1));
    seen[static_cast<std::size_t>(v)] = true;
    weights[static_cast<std::size_t>(v)] = w;
  }
  return Graph::from_edges(n, edges, std::move(weights));
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  if (g.has_weights())
    for (Vertex v = 0; v < g.n(); ++v)
      if (g.weight(v) != 1) out << "w " << v + 1 << ' ' << g.weight(v) << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize(g);
}

// ---- named constructions ------------------------------------------------

Graph make_hole(int k) {
  if (k < 3) throw std::invalid_argument("hole length must be at least 3");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Graph::from_edges(k, e);
}

Graph make_complete(int n) {
  if (n < 0) throw std::invalid_argument("complete graph size must be nonnegative");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph make_path(int k) {
  if (k < 1) throw std::invalid_argument("path must have at least one vertex");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(k, e);
}

Graph make_cube() {
  std::vector<Edge> e;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) e.emplace_back(i, 4 + j);
  return Graph::from_edges(8, e);
}

Graph make_hajos() {
  const std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0},
                               {5, 1}, {5, 2}, {6, 0}, {6, 3}, {6, 4}};
  return Graph::from_edges(7, e);
}

Graph make_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gnp: negative vertex count");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp: p must lie in [0,1]");
  Rng rng(seed);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph make_house() {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}};
  return Graph::from_edges(5, e);
}

Graph make_wheel(int k) { return add_universal_clique(make_hole(k), 1); }

Graph make_k23() {
  const std::vector<Edge> e{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}};
  return Graph::from_edges(5, e);
}

Graph make_prism() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};
  return Graph::from_edges(6, e);
}

Graph make_gk(int k) {
  if (k < 1) throw std::invalid_argument("gk needs k >= 1");
  const std::vector<int> sizes(5, 2 * k);
  return blow_up(make_hole(5), sizes);
}

Graph construct_named(std::string_view description) {
  std::vector<std::string> tok;
  {
    std::istringstream in{std::string(description)};
    for (std::string t; in >> t;) tok.push_back(t);
  }
  if (tok.empty()) throw std::invalid_argument("empty graph name");
  auto int_arg = [&](std::size_t i) {
    if (i >= tok.size()) throw std::invalid_argument("missing parameter for " + tok[0]);
    std::size_t used = 0;
    const long long v = std::stoll(tok[i], &used);
    if (used != tok[i].size()) throw std::invalid_argument("bad integer '" + tok[i] + "'");
    return v;
  };
  auto expect_args = [&](std::size_t k) {
    if (tok.size() != k + 1) throw std::invalid_argument(tok[0] + " takes " + std::to_string(k) + " parameter(s)");
  };
  const std::string& name = tok[0];
  if (name == "hole") { expect_args(1); return make_hole(static_cast<int>(int_arg(1))); }
  if (name == "complete") { expect_args(1); return make_complete(static_cast<int>(int_arg(1))); }
  if (name == "path") { expect_args(1); return make_path(static_cast<int>(int_arg(1))); }
  if (name == "cube") { expect_args(0); return make_cube(); }
  if (name == "hajos") { expect_args(0); return make_hajos(); }
  if (name == "house") { expect_args(0); return make_house(); }
  if (name == "wheel") { expect_args(1); return make_wheel(static_cast<int>(int_arg(1))); }
  if (name == "k23") { expect_args(0); return make_k23(); }
  if (name == "prism") { expect_args(0); return make_prism(); }
  if (name == "gk") { expect_args(1); return make_gk(static_cast<int>(int_arg(1))); }
  if (name == "gnp") {
    expect_args(3);
    std::size_t used = 0;
    const double p = std::stod(tok[2], &used);
    if (used != tok[2].size()) throw std::invalid_argument("bad probability '" + tok[2] + "'");
    return make_gnp(static_cast<int>(int_arg(1)), p, static_cast<std::uint64_t>(std::stoull(tok[3])));
  }
  throw std::invalid_argument("unknown graph name '" + name + "'");
}

// ---- operations ---------------------------------------------------------

Graph blow_up(const Graph& g, std::span<const int> sizes) {
  if (sizes.size() != static_cast<std::size_t>(g.n())) throw std::invalid_argument("blow_up: size vector mismatch");
  std::vector<int> start(sizes.size() + 1, 0);
  for (std::size_t v = 0; v < sizes.size(); ++v) {
    if (sizes[v] < 1) throw std::invalid_argument("blow_up: clique size must be positive");
    start[v + 1] = start[v] + sizes[v];
  }
  GraphBuilder b(start.back());
  for (Vertex v = 0; v < g.n(); ++v) {
    for (int i = start[v]; i < start[v + 1]; ++i)
      for (int j = i + 1; j < start[v + 1]; ++j) b.add_edge(i, j);
    for (Vertex u : g.neighbors(v)) {
      if (u < v) continue;
      for (int i = start[v]; i < start[v + 1]; ++i)
        for (int j = start[u]; j < start[u + 1]; ++j) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

Graph add_universal_clique(const Graph& g, int t) {
  if (t < 0) throw std::invalid_argument("add_universal_clique: negative size");
  GraphBuilder b(g.n() + t);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (int i = g.n(); i < g.n() + t; ++i)
    for (int j = 0; j < i; ++j) b.add_edge(i, j);
  if (g.has_weights())
    for (Vertex v = 0; v < g.n(); ++v) b.set_weight(v, g.weight(v));
  return std::move(b).build();
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  VertexSet sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("induced_subgraph: duplicate vertex");
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.n()) throw std::invalid_argument("induced_subgraph: id out of range");
    local[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
  }
  GraphBuilder b(static_cast<int>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (Vertex u : g.neighbors(sorted[i]))
      if (local[static_cast<std::size_t>(u)] > static_cast<int>(i)) b.add_edge(static_cast<int>(i), local[static_cast<std::size_t>(u)]);
  if (g.has_weights())
    for (std::size_t i = 0; i < sorted.size(); ++i) b.set_weight(static_cast<int>(i), g.weight(sorted[i]));
  return {std::move(b).build(), std::move(sorted)};
}

VertexSet complement_of(const Graph& g, std::span<const Vertex> s) {
  std::vector<bool> in(static_cast<std::size_t>(g.n()), false);
  for (Vertex v : s) in[static_cast<std::size_t>(v)] = true;
  VertexSet out;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!in[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

std::vector<VertexSet> components_without(const Graph& g, std::span<const Vertex> removed) {
  std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
  for (Vertex v : removed) comp[static_cast<std::size_t>(v)] = -2;
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<Vertex> q;
    q.push(s);
    comp[static_cast<std::size_t>(s)] = id;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      out.back().push_back(v);
      for (Vertex u : g.neighbors(v))
        if (comp[static_cast<std::size_t>(u)] == -1) {
          comp[static_cast<std::size_t>(u)] = id;
          q.push(u);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) { return components_without(g, {}).size() <= 1; }

bool check_representation(const Graph& g) {
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] == v || nb[i] < 0 || nb[i] >= g.n()) return false;
      if (i > 0 && nb[i - 1] >= nb[i]) return false;
      const auto& back = g.neighbors(nb[i]);
      if (!std::binary_search(back.begin(), back.end(), v)) return false;
    }
  }
  return true;
}

}  // namespace cehf
