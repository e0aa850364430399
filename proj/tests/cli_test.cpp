#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mwkit/cli.hpp"
#include "mwkit/io.hpp"
#include "mwkit/multiweight.hpp"
#include "mwkit/tree.hpp"
#include "oracles.hpp"

using namespace mwkit;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MWKIT_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "mwkit-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

std::string write_scratch(const std::string& name, const std::string& text) {
  auto p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("check subcommand") {
  auto fig3 = call({"check", "leaf-tree", data("fig3-family.json")});
  CHECK(fig3.code == kExitAccept);
  CHECK(nlohmann::json::parse(fig3.out)["accepted"] == true);

  auto k3 = call({"check", "tree", data("k3-family.json")});
  CHECK(k3.code == kExitReject);
  auto j = nlohmann::json::parse(k3.out);
  CHECK(j["criterion"] == "median");
  CHECK(j["witness"]["labels"] == nlohmann::json::array({1, 2, 3}));

  CHECK(call({"check", "graph", data("k3-family.json")}).code == kExitAccept);
  CHECK(call({"check", "diversity", data("k3-family.json")}).code == kExitAccept);
}

TEST_CASE("exit code 2 for usage and input errors") {
  CHECK(call({}).code == kExitInputError);
  CHECK(call({"frobnicate"}).code == kExitInputError);
  CHECK(call({"check", "forest", data("k3-family.json")}).code == kExitInputError);
  CHECK(call({"check", "tree", data("no-such-file.json")}).code == kExitInputError);
  CHECK(call({"check", "tree", write_scratch("broken.json", "{")}).code == kExitInputError);
  auto pairs_only = write_scratch("pairs.json", R"({"n": 3, "weights": {"1,2": "1", "1,3": "1", "2,3": "1"}})");
  CHECK(call({"check", "graph", pairs_only}).code == kExitInputError);
  CHECK(call({"gen", "tree", "--n", "1"}).code == kExitInputError);
  CHECK(call({"gen", "tree", "--n", "40"}).code == kExitInputError);
  auto usage = call({"check"});
  CHECK(usage.code == kExitInputError);
  CHECK_FALSE(usage.err.empty());
}

TEST_CASE("cap flag and environment") {
  auto big = call({"gen", "tree", "--n", "18", "--seed", "2"});
  CHECK(big.code == kExitInputError);
  auto raised = call({"--cap", "20", "gen", "tree", "--n", "18", "--seed", "2"});
  CHECK(raised.code == kExitAccept);
  auto path = write_scratch("big-tree.json", raised.out);
  CHECK(call({"multiweights", path}).code == kExitInputError);
  ::setenv("MWKIT_CAP", "20", 1);
  auto env = call({"gen", "tree", "--n", "18", "--seed", "2"});
  ::unsetenv("MWKIT_CAP");
  CHECK(env.code == kExitAccept);
  CHECK(env.out == raised.out);
}

TEST_CASE("gen") {
  auto a = call({"gen", "tree", "--n", "6", "--seed", "7"});
  auto b = call({"gen", "tree", "--n", "6", "--seed", "7"});
  REQUIRE(a.code == kExitAccept);
  CHECK(a.out == b.out);
  auto g = parse_graph(a.out);
  CHECK(g.vertex_count() == 6);
  CHECK(g.labelled_count() == 6);
  CHECK(g.edges().size() == 5);
  CHECK(call({"gen", "tree", "--n", "6", "--seed", "8"}).out != a.out);

  for (int seed = 1; seed <= 20; ++seed) {
    auto r = call({"gen", "leaf-tree", "--n", "4", "--seed", std::to_string(seed)});
    WeightedTree t(parse_graph(r.out));
    CHECK(t.is_essential());
    const auto nodes = t.nodes().size();
    const auto internal = internal_edges(t).size();
    // star: one node and no internal edge; quartet: two nodes and one bridge
    CHECK(((nodes == 1 && internal == 0) || (nodes == 2 && internal == 1)));
  }

  auto w = call({"gen", "graph", "--n", "5", "--seed", "3", "--weight-range", "16,16"});
  for (const auto& e : parse_graph(w.out).edges()) CHECK(e.weight == 1);
  CHECK(call({"gen", "graph", "--n", "5", "--weight-range", "9,2"}).code == kExitInputError);
}

TEST_CASE("multiweights and steiner") {
  auto out = scratch("fig3-family.json").string();
  REQUIRE(call({"multiweights", data("fig3-tree.json"), "-o", out}).code == kExitAccept);
  CHECK(parse_family(read_file(out)) == parse_family(read_file(data("fig3-family.json"))));

  auto s = call({"steiner", data("k3-graph.json"), "--subset", "1,2,3"});
  CHECK(s.code == kExitAccept);
  CHECK(s.out.rfind("// D_{1,2,3} = 2", 0) == 0);
  CHECK(s.out.find("graph") != std::string::npos);
  CHECK(call({"steiner", data("k3-graph.json"), "--subset", "1,x"}).code == kExitInputError);
  CHECK(call({"steiner", data("k3-graph.json"), "--subset", "1,9"}).code == kExitInputError);
  // label order on the command line does not matter
  CHECK(call({"steiner", data("k3-graph.json"), "--subset", "3,1,2"}).out == s.out);
}

TEST_CASE("realize") {
  auto g = call({"realize", "graph", data("k3-family.json"), "--format", "json"});
  CHECK(g.code == kExitAccept);
  CHECK(family_of(parse_graph(g.out)) == parse_family(read_file(data("k3-family.json"))));

  auto t = call({"realize", "tree", data("k3-family.json")});
  CHECK(t.code == kExitReject);
  CHECK(nlohmann::json::parse(t.out)["criterion"] == "median");

  auto dot = scratch("fig3.dot").string();
  auto l = call({"realize", "leaf-tree", data("fig3-family.json"), "-o", dot});
  CHECK(l.code == kExitAccept);
  CHECK(read_file(dot).find("dashed") != std::string::npos);

  auto lj = call({"realize", "leaf-tree", data("fig3-family.json"), "--format", "json"});
  auto tree = parse_graph(lj.out);
  CHECK(family_of(WeightedTree(tree)) == parse_family(read_file(data("fig3-family.json"))));
}

TEST_CASE("quartet diagnostics") {
  auto q = call({"quartets", data("fig3-family.json")});
  REQUIRE(q.code == kExitAccept);
  auto rows = nlohmann::json::parse(q.out);
  CHECK(rows.size() == 210);
  bool seen = false;
  for (const auto& row : rows)
    if (row["quartet"] == nlohmann::json::array({1, 3, 4, 7})) {
      seen = true;
      CHECK(row["shape"] == "split");
      CHECK(row["pairing"] == nlohmann::json::parse("[[1,3],[4,7]]"));
    }
  CHECK(seen);

  auto l = nlohmann::json::parse(call({"lsets", data("fig3-family.json"), "--quad", "1,9,4,7"}).out);
  CHECK(l["first"] == nlohmann::json::array({1, 2, 9, 10}));
  CHECK(l["covers"] == false);
  CHECK(call({"lsets", data("fig3-family.json"), "--quad", "1,2,3"}).code == kExitInputError);

  auto c = call({"qclasses", data("fig3-family.json")});
  CHECK(c.code == kExitAccept);
  CHECK(nlohmann::json::parse(c.out).size() == 6);

  auto c4 = write_scratch("c4.json", serialize_family(family_of(oracle::four_cycle())));
  auto nq = nlohmann::json::parse(call({"quartets", c4}).out);
  CHECK(nq[0]["shape"] == "not-treelike");
}
