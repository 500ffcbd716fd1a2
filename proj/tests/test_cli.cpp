#include <filesystem>
#include <fstream>

#include "cehf/certificates.hpp"
#include "cehf/cli.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"

using namespace cehf;
using nlohmann::json;

namespace {

std::string temp_graph(const std::string& name, const Graph& g) {
  const auto dir = std::filesystem::temp_directory_path() / "cehf_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / name).string();
  write_graph_file(path, g);
  return path;
}

CommandResult run(std::vector<std::string> args) { return execute_command(args); }

std::vector<Vertex> zero_based(const json& a) {
  std::vector<Vertex> v;
  for (const auto& x : a) v.push_back(x.get<int>() - 1);
  return v;
}

}  // namespace

TEST_CASE("recognize exit codes and certificates") {
  const auto g1 = temp_graph("g1.graph", make_gk(1));
  auto r = run({"recognize", "--class", "cap-even-hole-free", g1});
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["verdict"] == "accepted");
  CHECK(j["certificate_verified"] == true);

  const Graph c6u = add_universal_clique(make_hole(6), 1);
  auto s = run({"recognize", temp_graph("c6u.graph", c6u)});
  CHECK(s.exit_code == 1);
  auto k = json::parse(s.out);
  CHECK(k["witness"]["kind"] == "even-wheel");
  CHECK(check_witness(c6u, {ForbiddenKind::EvenWheel, zero_based(k["witness"]["vertices"])}));

  auto u = run({"--budget", "3", "recognize", "--class", "cap-even-hole-free", g1});
  CHECK(u.exit_code == 3);
  CHECK(json::parse(u.out)["verdict"] == "undecided");
}

TEST_CASE("coloring commands") {
  auto c = run({"color", "-q", "2", temp_graph("c5.graph", make_hole(5))});
  CHECK(c.exit_code == 1);
  CHECK(json::parse(c.out)["colorable"] == false);

  const auto hajos = temp_graph("hajos.graph", make_hajos());
  auto h = run({"chromatic", hajos});
  CHECK(h.exit_code == 0);
  auto j = json::parse(h.out);
  CHECK(j["chi"] == 4);
  CHECK(is_proper_coloring(make_hajos(), j["witness"].get<Coloring>()));

  auto q = run({"color", "-q", "4", hajos});
  CHECK(q.exit_code == 0);
  CHECK(is_proper_coloring(make_hajos(), json::parse(q.out)["witness"].get<Coloring>()));

  auto g = run({"greedy-color", hajos});
  CHECK(json::parse(g.out)["value"].get<int>() <= 5);

  auto w = run({"clique-number", temp_graph("g1.graph", make_gk(1))});
  CHECK(json::parse(w.out)["value"] == 4);

  auto big = run({"--budget", "4", "chromatic", temp_graph("prism.graph", make_prism())});
  CHECK(big.exit_code == 3);
  CHECK(json::parse(big.out)["status"] == "unsupported");
}

TEST_CASE("mwss command") {
  const Graph p3 = make_path(3).with_weights({2, 3, 2});
  auto r = run({"mwss", temp_graph("p3.graph", p3)});
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["value"] == 4);
  CHECK(j["witness"] == json::array({1, 3}));
}

TEST_CASE("decompose, skeleton and treewidth") {
  const auto p4 = temp_graph("p4.graph", make_path(4));
  auto d = run({"decompose", p4});
  CHECK(json::parse(d.out)["atoms"].size() == 3);
  auto dot = run({"decompose", "--dot", p4});
  CHECK(dot.out.rfind("digraph", 0) == 0);

  auto s = run({"skeleton", temp_graph("w5.graph", fx::wheel(5))});
  auto sj = json::parse(s.out);
  CHECK(sj["atoms"][0]["kind"] == "skeleton");
  CHECK(sj["atoms"][0]["universal"] == json::array({6}));
  CHECK(parse_graph(sj["atoms"][0]["skeleton"].get<std::string>()) == make_hole(5));

  auto t = run({"treewidth", "--skeleton", temp_graph("cube.graph", make_cube())});
  CHECK(t.exit_code == 0);
  CHECK(json::parse(t.out)["width"].get<int>() <= 4);
  auto tri = run({"treewidth", "--skeleton", temp_graph("k3.graph", make_complete(3))});
  CHECK(tri.exit_code == 1);
}

TEST_CASE("generate is deterministic and in class") {
  const std::vector<std::string> args{"generate", "--seed", "5", "--ears", "2", "--glue", "1", "--class", "cap-even-hole-free"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto j = json::parse(a.out);
  const Graph g = parse_graph(j["graph"].get<std::string>());
  const auto path = temp_graph("gen.graph", g);
  CHECK(run({"recognize", "--class", "cap-even-hole-free", path}).exit_code == 0);
}

TEST_CASE("oracle command") {
  const auto house = temp_graph("house.graph", make_house());
  auto c = run({"oracle", "cap", house});
  CHECK(c.exit_code == 0);
  CHECK(check_witness(make_house(), {ForbiddenKind::Cap, zero_based(json::parse(c.out)["witness"]["vertices"])}));
  CHECK(run({"oracle", "even-hole", temp_graph("c5.graph", make_hole(5))}).exit_code == 1);
  CHECK(json::parse(run({"oracle", "holes", temp_graph("cube.graph", make_cube())}).out)["value"] == 10);
  CHECK(json::parse(run({"oracle", "chromatic", house}).out)["value"] == 3);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"color", "c5.graph"}).exit_code == 2);
  CHECK(run({"chromatic", "/nonexistent/file.graph"}).exit_code == 2);
  const auto dir = std::filesystem::temp_directory_path() / "cehf_cli_test";
  std::filesystem::create_directories(dir);
  std::ofstream((dir / "bad.graph").string()) << "p 3 1\ne 1 9\n";
  auto r = run({"mwss", (dir / "bad.graph").string()});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run({"recognize", "--class", "perfect", (dir / "bad.graph").string()}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
}
