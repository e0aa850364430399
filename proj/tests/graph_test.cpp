#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "mwkit/error.hpp"
#include "mwkit/generate.hpp"
#include "mwkit/graph.hpp"
#include "mwkit/io.hpp"
#include "mwkit/tree.hpp"
#include "oracles.hpp"

using namespace mwkit;
using oracle::build;

namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::internal_error;
}

std::set<std::string> vertex_names(const WeightedTree& t) {
  return {t.graph().names().begin(), t.graph().names().end()};
}

std::set<std::pair<std::string, std::string>> edge_names(const WeightedGraph& g, const std::vector<Edge>& es) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& e : es) out.insert(std::minmax(g.name(e.u), g.name(e.v)));
  return out;
}

WeightedTree fig1() { return WeightedTree(parse_graph(oracle::data_file("fig1-tree.json"))); }

}  // namespace

TEST_CASE("validate_graph basics") {
  auto k3 = oracle::k3_unit();
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.edges().size() == 3);
  CHECK(kind_of([] { build(4, {}, {{"1", "2", 1}, {"3", "4", 1}}); }) == ErrorKind::disconnected);
  CHECK(kind_of([] { build(2, {}, {{"1", "2", 0}}); }) == ErrorKind::nonpositive_weight);
  CHECK(kind_of([] { build(2, {}, {{"1", "1", 1}, {"1", "2", 1}}); }) == ErrorKind::self_loop);
  CHECK(kind_of([] { build(2, {}, {{"1", "2", 1}, {"2", "1", 2}}); }) == ErrorKind::parallel_edge);
  CHECK(kind_of([] { build(2, {}, {{"1", "9", 1}}); }) == ErrorKind::unknown_vertex);
  // zero is fine once the regime allows it
  auto g = build(2, {}, {{"1", "2", 0}}, WeightRegime::nonnegative);
  CHECK(g.total_weight() == 0);
}

TEST_CASE("labels and names") {
  auto t = oracle::quartet_tree();
  const auto& g = t.graph();
  CHECK(g.labelled_count() == 4);
  CHECK(g.labels_are_contiguous());
  CHECK(g.name(0) == "1");
  CHECK(g.name(4) == "x");
  CHECK_FALSE(g.is_labelled(4));
  CHECK(g.label(g.vertex_of(3)) == 3);
  CHECK(kind_of([&] { g.vertex_of(7); }) == ErrorKind::unknown_vertex);
  CHECK(g.total_weight() == 6);
}

TEST_CASE("WeightedTree rejects graphs with cycles") {
  CHECK(kind_of([] { WeightedTree t(oracle::k3_unit()); }) == ErrorKind::not_a_tree);
}

TEST_CASE("induced_subtree") {
  auto t = fig1();
  auto sub = induced_subtree(t, SubsetKey{1, 5, 7, 8});
  CHECK(vertex_names(sub) == std::set<std::string>{"1", "2", "3", "4", "5", "7", "8"});

  auto same = induced_subtree(t, SubsetKey{1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(same.graph().edges().size() == t.graph().edges().size());
  CHECK(same.graph().total_weight() == t.graph().total_weight());

  auto path = induced_subtree(oracle::star3(), SubsetKey{1, 2});
  CHECK(vertex_names(path) == std::set<std::string>{"1", "2", "c"});
  CHECK(path.graph().edges().size() == 2);
}

TEST_CASE("internal_edges") {
  auto t = fig1();
  CHECK(edge_names(t.graph(), internal_edges(t)) == std::set<std::pair<std::string, std::string>>{{"2", "3"}, {"3", "4"}});
  CHECK(internal_edges(oracle::star3()).empty());
  auto q = oracle::quartet_tree();
  auto in = internal_edges(q);
  REQUIRE(in.size() == 1);
  CHECK(edge_names(q.graph(), in) == std::set<std::pair<std::string, std::string>>{{"x", "y"}});
  CHECK(internal_edges(WeightedTree(build(2, {}, {{"1", "2", 3}}))).empty());
  CHECK(internal_edges(WeightedTree(build(3, {}, {{"1", "2", 3}, {"2", "3", 1}}))).empty());
}

TEST_CASE("tilde_edges") {
  auto t = fig1();
  const SubsetKey s{1, 5, 7, 8};
  auto tilde = edge_names(t.graph(), tilde_edges(t, s));
  CHECK(tilde.contains({"2", "3"}));
  // strictly fewer than the edges of the induced subtree
  auto sub = induced_subtree(t, s);
  auto sub_edges = edge_names(sub.graph(), sub.graph().edges());
  CHECK(std::includes(sub_edges.begin(), sub_edges.end(), tilde.begin(), tilde.end()));
  CHECK(tilde.size() < sub_edges.size());

  CHECK(edge_names(t.graph(), tilde_edges(t, SubsetKey{1, 5, 6, 7, 8})) == edge_names(t.graph(), internal_edges(t)));

  auto q = oracle::quartet_tree();
  CHECK(tilde_edges(q, SubsetKey{1, 2}).empty());
  CHECK(tilde_edges(q, SubsetKey{1, 3}).size() == 1);
  CHECK(kind_of([&] { tilde_edges(t, SubsetKey{1, 2}); }) == ErrorKind::not_a_leaf);
}

TEST_CASE("essentialize") {
  auto p = WeightedTree(build(2, {"x"}, {{"1", "x", 2}, {"x", "2", 3}}));
  auto e = essentialize(p);
  REQUIRE(e.graph().edges().size() == 1);
  CHECK(e.graph().edges()[0].weight == 5);
  CHECK(e.graph().vertex_count() == 2);

  auto q = oracle::quartet_tree();
  CHECK(essentialize(q) == q);

  // caterpillar spine 1 - a - x - y - b - 2 with legs 3@a, 4@b; x, y have degree 2
  auto cat = WeightedTree(build(4, {"a", "x", "y", "b"},
                                {{"1", "a", 1}, {"a", "x", Rational(1, 2)}, {"x", "y", 2}, {"y", "b", Rational(3, 4)},
                                 {"b", "2", 1}, {"3", "a", 5}, {"4", "b", 1}}));
  auto ce = essentialize(cat);
  CHECK(ce.is_essential());
  CHECK(ce.graph().vertex_count() == 6);
  CHECK(oracle::label_distances(ce.graph()) == oracle::label_distances(cat.graph()));
  bool found = false;
  for (const auto& edge : ce.graph().edges())
    if (std::pair<std::string, std::string>(std::minmax(ce.graph().name(edge.u), ce.graph().name(edge.v))) ==
        std::pair<std::string, std::string>{"a", "b"}) {
      CHECK(edge.weight == Rational(13, 4));
      found = true;
    }
  CHECK(found);

  // a labelled degree-2 vertex survives
  auto path = WeightedTree(build(3, {}, {{"1", "2", 1}, {"2", "3", 1}}));
  CHECK(essentialize(path) == path);
}

TEST_CASE("essentialize preserves distances on random subdivided trees") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    GenOptions o;
    o.kind = InstanceKind::leaf_tree;
    o.n = 3 + round % 5;
    o.seed = 100 + round;
    auto base = generate(o);
    // subdivide every edge once or twice with unlabelled vertices
    RawGraph raw = to_raw(base);
    RawGraph sub;
    sub.n = raw.n;
    sub.extra = raw.extra;
    int fresh = 0;
    for (const auto& e : raw.edges) {
      int pieces = 1 + static_cast<int>(rng() % 3);
      std::string prev = e.u;
      for (int k = 1; k < pieces; ++k) {
        std::string mid = "s" + std::to_string(++fresh);
        sub.extra.push_back(mid);
        sub.edges.push_back({prev, mid, e.weight / pieces});
        prev = mid;
      }
      sub.edges.push_back({prev, e.v, e.weight / pieces});
    }
    WeightedTree t(validate_graph(sub));
    auto e = essentialize(t);
    CHECK(e.is_essential());
    CHECK(oracle::label_distances(e.graph()) == oracle::label_distances(t.graph()));
    CHECK(e.graph().total_weight() == t.graph().total_weight());
  }
}

TEST_CASE("internal and twig edges partition the edge set") {
  for (int round = 0; round < 60; ++round) {
    GenOptions o;
    o.kind = round % 2 ? InstanceKind::tree : InstanceKind::leaf_tree;
    o.n = 2 + round % 7;
    o.seed = 7 + round;
    WeightedTree t(generate(o));
    auto in = internal_edges(t);
    auto tw = twig_edges(t);
    CHECK(in.size() + tw.size() == t.graph().edges().size());
    for (const auto& e : t.graph().edges()) {
      int hits = static_cast<int>(std::count(in.begin(), in.end(), e) + std::count(tw.begin(), tw.end(), e));
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("tilde edges sit inside the induced subtree") {
  for (int round = 0; round < 30; ++round) {
    GenOptions o;
    o.kind = InstanceKind::leaf_tree;
    o.n = 3 + round % 5;
    o.seed = 300 + round;
    WeightedTree t(generate(o));
    for (const auto& s : subsets_of(o.n)) {
      auto sub = induced_subtree(t, s);
      auto sub_edges = edge_names(sub.graph(), sub.graph().edges());
      auto tilde = edge_names(t.graph(), tilde_edges(t, s));
      CHECK(std::includes(sub_edges.begin(), sub_edges.end(), tilde.begin(), tilde.end()));
    }
  }
}

TEST_CASE("complete_graph") {
  auto d = oracle::pairs(3, {{{1, 2}, 3}, {{1, 3}, 4}, {{2, 3}, 5}});
  auto g = complete_graph(d);
  CHECK(g.edges().size() == 3);
  CHECK(g.total_weight() == 12);
}
