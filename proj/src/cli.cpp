#include "cehf/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cehf/acceptance.hpp"
#include "cehf/construct.hpp"
#include "cehf/decomposition.hpp"
#include "cehf/oracles.hpp"
#include "cehf/recognition.hpp"
#include "cehf/skeleton.hpp"
#include "cehf/solvers.hpp"
#include "cehf/treewidth.hpp"
#include "json.hpp"

namespace cehf {

namespace {

using nlohmann::json;

json ids(const std::vector<Vertex>& v) {
  json a = json::array();
  for (Vertex x : v) a.push_back(x + 1);
  return a;
}

json ids_via(const std::vector<Vertex>& v, const std::vector<Vertex>& map) {
  json a = json::array();
  for (Vertex x : v) a.push_back(map[static_cast<std::size_t>(x)] + 1);
  return a;
}

json witness_json(const ForbiddenWitness& w) { return {{"kind", std::string(to_string(w.kind))}, {"vertices", ids(w.vertices)}}; }

json coloring_json(const Coloring& c) { return json(c); }

json td_json(const TreeDecomposition& td) {
  json bags = json::array();
  for (const auto& b : td.bags) bags.push_back(ids(b));
  json edges = json::array();
  for (auto [a, b] : td.edges) edges.push_back({a + 1, b + 1});
  return {{"width", td.width()}, {"bags", bags}, {"tree_edges", edges}};
}

json tree_json(const DecompositionTree& t) {
  json nodes = json::array();
  for (const auto& nd : t.nodes) {
    json j = {{"vertices", ids(nd.vertices)}};
    if (nd.is_leaf()) {
      j["atom"] = true;
    } else {
      j["atom"] = false;
      j["cutset"] = ids(nd.cutset);
      j["children"] = {nd.left + 1, nd.right + 1};
    }
    nodes.push_back(j);
  }
  json atoms = json::array();
  for (const auto& a : t.atoms()) atoms.push_back(ids(a));
  return {{"nodes", nodes}, {"atoms", atoms}};
}

// Skeleton ids are printed 1-based; clique map and U in input ids.
json skeleton_json(const SkeletonDecomposition& sd, const VertexSet& atom) {
  json classes = json::array();
  for (const auto& k : sd.clique_map) classes.push_back(ids_via(k, atom));
  return {{"skeleton", serialize(sd.skeleton)},
          {"skeleton_n", sd.skeleton.n()},
          {"clique_map", classes},
          {"universal", ids_via(sd.universal, atom)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Graph load(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_graph(buf.str());
  }
  return read_graph_file(path);
}

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

CommandResult execute_command(const std::vector<std::string>& args) {
  CommandResult res;
  std::ostringstream err;

  CLI::App app{"Structure and algorithms for (cap, even hole)-free graphs", "cehf"};
  app.require_subcommand(1);
  app.fallthrough();
  int budget = 0;
  app.add_option("--budget", budget, "Uniform size guard for exponential searches (0: defaults)")->check(CLI::NonNegativeNumber);

  std::string file, cls_name = "cap-4hole-odd-signable";
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", file, "Graph file ('-' for stdin)")->required(); };

  auto* recognize_cmd = app.add_subcommand("recognize", "Decide class membership with a certificate");
  recognize_cmd->add_option("--class", cls_name, "cap-4hole-odd-signable or cap-even-hole-free");
  add_file(recognize_cmd);

  bool dot = false;
  auto* decompose_cmd = app.add_subcommand("decompose", "Clique-cutset decomposition tree");
  decompose_cmd->add_flag("--dot", dot, "Emit Graphviz instead of JSON");
  add_file(decompose_cmd);

  auto* skeleton_cmd = app.add_subcommand("skeleton", "Skeleton, clique map and universal clique of every atom");
  add_file(skeleton_cmd);

  bool as_skeleton = false;
  auto* treewidth_cmd = app.add_subcommand("treewidth", "Tree decomposition");
  treewidth_cmd->add_flag("--skeleton", as_skeleton, "Treat the input as a skeleton: width <= 5 or a rejection");
  add_file(treewidth_cmd);

  auto* clique_cmd = app.add_subcommand("clique-number", "Maximum clique");
  add_file(clique_cmd);
  auto* greedy_cmd = app.add_subcommand("greedy-color", "Greedy coloring along a degeneracy order");
  add_file(greedy_cmd);
  int q = 0;
  auto* color_cmd = app.add_subcommand("color", "Exact q-coloring");
  color_cmd->add_option("-q", q, "Number of colors")->required()->check(CLI::PositiveNumber);
  add_file(color_cmd);
  auto* chromatic_cmd = app.add_subcommand("chromatic", "Chromatic number with an optimal coloring");
  add_file(chromatic_cmd);
  auto* mwss_cmd = app.add_subcommand("mwss", "Maximum weight stable set");
  add_file(mwss_cmd);

  GeneratorParams gp;
  std::string gen_class = std::string(to_string(gp.target)), out_path;
  int count = 1;
  auto* generate_cmd = app.add_subcommand("generate", "Random in-class instance with provenance");
  generate_cmd->add_option("--seed", gp.seed, "PRNG seed");
  generate_cmd->add_option("--ears", gp.ear_count, "Ears per skeleton")->check(CLI::NonNegativeNumber);
  generate_cmd->add_option("--max-ear-len", gp.max_ear_length, "Maximum ear length in edges")->check(CLI::Range(2, 1000));
  generate_cmd->add_option("--max-blowup", gp.max_blowup, "Maximum clique size per skeleton vertex")->check(CLI::NonNegativeNumber);
  generate_cmd->add_option("--max-universal", gp.max_universal, "Maximum universal clique size")->check(CLI::NonNegativeNumber);
  generate_cmd->add_option("--glue", gp.glue_count, "Number of clique gluings")->check(CLI::NonNegativeNumber);
  generate_cmd->add_option("--class", gen_class, "Target class");
  generate_cmd->add_option("--max-vertices", gp.max_vertices, "Vertex cap")->check(CLI::NonNegativeNumber);
  generate_cmd->add_option("--count", count, "Number of instances (seeds seed..seed+count-1)")->check(CLI::PositiveNumber);
  generate_cmd->add_option("--out", out_path, "Write the graph here and provenance to <out>.json");

  std::string kind;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive reference computations");
  oracle_cmd
      ->add_option("kind", kind,
                   "even-hole, 4-hole, cap, theta, prism, even-wheel, triangle, odd-signable, holes, chromatic, "
                   "mwss, clique, clique-cutset")
      ->required();
  add_file(oracle_cmd);

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

  std::string name;
  auto* named_cmd = app.add_subcommand("named", "Print a named graph in the file format");
  named_cmd->add_option("name", name, "e.g. 'hole 5', 'gk 1', 'hajos'")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::CallForAllHelp&) {
    res.out = app.help("", CLI::AppFormatMode::All);
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = 2;
    res.err = std::string(e.what()) + "\nRun with --help for usage.\n";
    return res;
  }

  const Limits limits = budget > 0 ? Limits::uniform(budget) : Limits{};
  json out;
  try {
    if (recognize_cmd->parsed()) {
      const Graph g = load(file);
      const auto r = recognize(g, parse_graph_class(cls_name), limits);
      out = {{"verdict", std::string(to_string(r.verdict))}, {"class", cls_name}, {"stage", r.stage}, {"reason", r.reason}};
      if (r.witness) out["witness"] = witness_json(*r.witness);
      if (r.verdict == Verdict::Accepted) {
        json atoms = json::array();
        for (const auto& a : r.atoms) {
          json j = {{"vertices", ids(a.vertices)}, {"complete", a.complete}};
          if (a.skeleton) {
            j.update(skeleton_json(*a.skeleton, a.vertices));
            j["signing"] = a.signing->value;
            j["skeleton_even_hole_free"] = a.needs_even_hole_free;
          }
          atoms.push_back(j);
        }
        out["tree"] = tree_json(r.tree);
        out["atoms"] = atoms;
        out["certificate_verified"] = verify_accept_certificate(g, r, limits);
      }
      res.exit_code = r.verdict == Verdict::Accepted ? 0 : r.verdict == Verdict::Rejected ? 1 : 3;
      err << to_string(r.verdict) << " (" << r.stage << ")" << (r.reason.empty() ? "" : ": " + r.reason) << "\n";
    } else if (decompose_cmd->parsed()) {
      const Graph g = load(file);
      const auto t = clique_cutset_tree(g);
      if (dot) {
        res.out = to_dot(t, 1);
        return res;
      }
      out = tree_json(t);
      err << t.leaves().size() << " atoms\n";
    } else if (skeleton_cmd->parsed()) {
      const Graph g = load(file);
      const auto t = clique_cutset_tree(g);
      json atoms = json::array();
      bool rejected = false;
      for (const auto& a : t.atoms()) {
        const auto sk = extract_skeleton(induced_subgraph(g, a).graph);
        json j = {{"vertices", ids(a)}};
        if (std::holds_alternative<CompleteAtom>(sk)) {
          j["kind"] = "complete";
        } else if (const auto* sd = std::get_if<SkeletonDecomposition>(&sk)) {
          j["kind"] = "skeleton";
          j.update(skeleton_json(*sd, a));
        } else {
          const auto& rj = std::get<SkeletonReject>(sk);
          rejected = true;
          j["kind"] = "rejected";
          j["reason"] = rj.reason == SkeletonReject::Reason::Triangle ? "skeleton has a triangle" : "skeleton has a clique cutset";
          j["skeleton_vertices"] = ids(rj.skeleton_vertices);
          j.update(skeleton_json(rj.partial, a));
        }
        atoms.push_back(j);
      }
      out = {{"atoms", atoms}};
      res.exit_code = rejected ? 1 : 0;
    } else if (treewidth_cmd->parsed()) {
      const Graph g = load(file);
      if (as_skeleton) {
        const auto st = skeleton_tree_decomposition(g, limits);
        static const char* names[] = {"ok", "rejected", "undecided"};
        out = {{"status", names[static_cast<int>(st.status)]}, {"reason", st.reason}, {"exact_search", st.exact_search}};
        if (st.status == SkeletonTreewidth::Status::Ok) out.update(td_json(st.td));
        if (st.triangle) out["witness"] = witness_json(*st.triangle);
        res.exit_code = st.status == SkeletonTreewidth::Status::Ok ? 0 : st.status == SkeletonTreewidth::Status::Rejected ? 1 : 3;
      } else {
        out = td_json(heuristic_tree_decomposition(g));
        out["method"] = "min-fill";
      }
    } else if (clique_cmd->parsed()) {
      const auto c = clique_number(load(file), limits);
      if (!c.ok) throw BudgetExceeded(c.reason);
      out = {{"value", c.clique.size()}, {"witness", ids(c.clique)}, {"method", c.method}};
    } else if (greedy_cmd->parsed()) {
      const auto c = greedy_color(load(file));
      out = {{"value", color_count(c)}, {"witness", coloring_json(c)}};
    } else if (color_cmd->parsed()) {
      const Graph g = load(file);
      const auto c = q_color(g, heuristic_tree_decomposition(g), q, limits);
      out = {{"colorable", c.has_value()}, {"q", q}};
      if (c) out["witness"] = coloring_json(*c);
      res.exit_code = c ? 0 : 1;
    } else if (chromatic_cmd->parsed()) {
      const Graph g = load(file);
      const auto c = chromatic_number(g, limits);
      if (!c.ok) throw BudgetExceeded(c.reason);
      out = {{"chi", c.chi}, {"value", c.chi}, {"witness", coloring_json(c.coloring)}, {"method", c.method}};
    } else if (mwss_cmd->parsed()) {
      const Graph g = load(file);
      const auto r = mwss(g, limits);
      if (!r.ok) throw BudgetExceeded(r.reason);
      out = {{"value", r.result.weight},
             {"witness", ids(r.result.set)},
             {"stats",
              {{"reweighted", r.stats.reweighted},
               {"reweight_violations", r.stats.reweight_violations},
               {"restriction_violations", r.stats.restriction_violations},
               {"structural_subproblems", r.stats.structural_subproblems},
               {"brute_subproblems", r.stats.brute_subproblems}}}};
    } else if (generate_cmd->parsed()) {
      gp.target = parse_graph_class(gen_class);
      json all = json::array();
      for (int i = 0; i < count; ++i) {
        GeneratorParams p = gp;
        p.seed = gp.seed + static_cast<std::uint64_t>(i);
        const auto inst = generate_instance(p, limits);
        json prov = provenance_json(inst);
        if (!out_path.empty()) {
          const std::string path = count == 1 ? out_path : out_path + "." + std::to_string(i + 1);
          write_graph_file(path, inst.graph);
          std::ofstream side(path + ".json", std::ios::binary);
          if (!side) throw std::runtime_error("cannot write " + path + ".json");
          side << dump(prov);
          prov["file"] = path;
        } else {
          prov["graph"] = serialize(inst.graph);
        }
        all.push_back(prov);
      }
      out = count == 1 ? all[0] : all;
    } else if (oracle_cmd->parsed()) {
      const Graph g = load(file);
      out = {{"kind", kind}};
      if (kind == "odd-signable") {
        const auto s = odd_signable_signing(g, limits);
        out["found"] = s.has_value();
        if (s) out["signing"] = s->value;
        res.exit_code = s ? 0 : 1;
      } else if (kind == "holes") {
        json holes = json::array();
        for (const auto& h : enumerate_holes(g, limits)) holes.push_back(ids(h));
        out["value"] = holes.size();
        out["holes"] = holes;
      } else if (kind == "chromatic" || kind == "mwss" || kind == "clique" || kind == "clique-cutset") {
        const BruteProblem bp = kind == "chromatic" ? BruteProblem::Chromatic
                                : kind == "mwss"    ? BruteProblem::Mwss
                                : kind == "clique"  ? BruteProblem::MaxClique
                                                    : BruteProblem::CliqueCutset;
        const auto c = brute_solve(g, bp, limits);
        out["found"] = !c.none;
        out["value"] = c.value;
        out["witness"] = bp == BruteProblem::Chromatic ? coloring_json(c.coloring) : ids(c.set);
        res.exit_code = c.none ? 1 : 0;
      } else {
        const auto w = find_forbidden_induced(g, parse_forbidden_kind(kind), limits);
        out["found"] = w.has_value();
        if (w) out["witness"] = witness_json(*w);
        res.exit_code = w ? 0 : 1;
      }
    } else if (selftest_cmd->parsed()) {
      const auto report = run_acceptance([&](const CriterionResult& r) { std::cerr << format_line(r) << std::endl; });
      json crit = json::array();
      for (const auto& c : report.criteria)
        crit.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      out = {{"criteria", crit}, {"pass", report.all_passed()}};
      res.exit_code = report.all_passed() ? 0 : 1;
    } else if (named_cmd->parsed()) {
      const Graph g = construct_named(name);
      out = {{"name", name}, {"n", g.n()}, {"m", g.m()}, {"graph", serialize(g)}};
    }
  } catch (const BudgetExceeded& e) {
    res.exit_code = 3;
    res.out = dump({{"status", "unsupported"}, {"reason", e.what()}});
    res.err = std::string("unsupported: ") + e.what() + "\n";
    return res;
  } catch (const ParseError& e) {
    res.exit_code = 2;
    res.err = std::string("parse error: ") + e.what() + "\n";
    return res;
  } catch (const std::exception& e) {
    res.exit_code = 2;
    res.err = std::string("error: ") + e.what() + "\n";
    return res;
  }
  res.out = dump(out);
  res.err += err.str();
  return res;
}

}  // namespace cehf
