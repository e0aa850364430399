#include "doctest.h"
#include "mwkit/checkers.hpp"
#include "mwkit/error.hpp"
#include "mwkit/generate.hpp"
#include "mwkit/multiweight.hpp"
#include "oracles.hpp"

using namespace mwkit;
using oracle::build;

namespace {

MultiweightFamily tree_family(InstanceKind kind, std::uint64_t seed, int n, double zero_twigs = 0) {
  GenOptions o;
  o.kind = kind;
  o.n = n;
  o.seed = seed;
  o.zero_twig_probability = zero_twigs;
  auto g = generate(o);
  return kind == InstanceKind::graph ? family_of(g) : family_of(WeightedTree(g));
}

void expect_rejection(const MultiweightFamily& f, const Verdict& v, const std::string& criterion) {
  REQUIRE_FALSE(v.accepted);
  CHECK(v.criterion == criterion);
  REQUIRE(v.witness.has_value());
  CHECK(confirm_witness(f, v));
}

}  // namespace

TEST_CASE("check_graphlike") {
  auto k3 = family_of(oracle::k3_unit());
  CHECK(check_graphlike(k3).accepted);

  auto low = k3.with_value(SubsetKey{1, 2, 3}, Rational(3, 2));
  auto v = check_graphlike(low);
  expect_rejection(low, v, "pair-steiner-minimum");
  CHECK(v.witness->labels == std::vector<Label>{1, 2, 3});
  CHECK(*v.witness->expected == 2);
  CHECK(*v.witness->found == Rational(3, 2));

  CHECK(check_graphlike(MultiweightFamily(2, {{SubsetKey{1, 2}, 7}})).accepted);

  auto bad_triangle = MultiweightFamily(3, {{SubsetKey{1, 2}, 1}, {SubsetKey{1, 3}, 1}, {SubsetKey{2, 3}, 5},
                                            {SubsetKey{1, 2, 3}, 2}});
  expect_rejection(bad_triangle, check_graphlike(bad_triangle), "triangle-inequality");
}

TEST_CASE("check_treelike") {
  auto path = family_of(build(3, {}, {{"1", "2", 2}, {"2", "3", 3}}));
  CHECK(check_treelike(path).accepted);

  auto k3 = family_of(oracle::k3_unit());
  expect_rejection(k3, check_treelike(k3), "median");

  auto star = family_of(WeightedTree(build(3, {"c"}, {{"1", "c", 1}, {"2", "c", 1}, {"3", "c", 1}})));
  auto v = check_treelike(star);
  expect_rejection(star, v, "median");
  CHECK(v.witness->candidates.empty());

  auto c4 = family_of(oracle::four_cycle());
  expect_rejection(c4, check_treelike(c4), "four-point");
}

TEST_CASE("check_leaf_treelike") {
  auto star = family_of(oracle::star3());
  CHECK(star.at(SubsetKey{1, 2, 3}) == 3);
  CHECK(check_leaf_treelike(star).accepted);

  auto q = family_of(oracle::quartet_tree());
  CHECK(q.at(SubsetKey{1, 2, 3, 4}) == 6);
  CHECK(check_leaf_treelike(q).accepted);
  auto d = pairs_of(q);
  auto classes = q_classes(d);
  CHECK(quartet_formula(d, classes, SubsetKey{1, 2, 3, 4}) == 6);

  auto bumped = q.with_value(SubsetKey{1, 2, 3, 4}, 7);
  auto v = check_leaf_treelike(bumped);
  expect_rejection(bumped, v, "quartet-formula");
  CHECK(v.witness->labels == std::vector<Label>{1, 2, 3, 4});
  CHECK(*v.witness->expected == 6);

  auto half = star.with_value(SubsetKey{1, 2, 3}, 4);
  expect_rejection(half, check_leaf_treelike(half), "three-weight-half-sum");

  // pairs fine for the three-point formula but violating the triangle inequality
  auto no_tree = MultiweightFamily(3, {{SubsetKey{1, 2}, 1}, {SubsetKey{1, 3}, 1}, {SubsetKey{2, 3}, 5},
                                       {SubsetKey{1, 2, 3}, Rational(7, 2)}});
  expect_rejection(no_tree, check_leaf_treelike(no_tree), "triangle-inequality");
}

TEST_CASE("checkers need the full family") {
  MultiweightFamily pairs_only(3, {{SubsetKey{1, 2}, 1}, {SubsetKey{1, 3}, 1}, {SubsetKey{2, 3}, 1}});
  for (auto* fn : {&check_graphlike, &check_treelike, &check_leaf_treelike, &check_diversity}) {
    try {
      fn(pairs_only);
      FAIL("expected IncompleteFamily");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::incomplete_family);
    }
  }
}

TEST_CASE("check_diversity") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed)
    CHECK(check_diversity(tree_family(InstanceKind::graph, seed, 2 + static_cast<int>(seed % 4))).accepted);
  CHECK(check_diversity(MultiweightFamily(2, {{SubsetKey{1, 2}, 3}})).accepted);

  auto f = family_of(build(4, {}, {{"1", "2", 1}, {"2", "3", 1}, {"3", "4", 1}, {"1", "4", 1}}));
  auto g = f.with_value(SubsetKey{1, 2, 3}, f.at(SubsetKey{1, 2, 4}) + f.at(SubsetKey{3, 4}) + 1);
  CHECK_FALSE(diversity_triangle_holds(g, {1, 2}, {4}, {3}));
  CHECK(diversity_triangle_holds(f, {1, 2}, {4}, {3}));
  expect_rejection(g, check_diversity(g), "diversity-triangle");

  // above the exhaustive limit the note records sampling
  auto big = tree_family(InstanceKind::tree, 3, 9);
  auto dv = check_diversity(big);
  CHECK(dv.accepted);
  CHECK(dv.note.find("sampled") != std::string::npos);
}

TEST_CASE("round trips on random instances") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 6);
    auto g = tree_family(InstanceKind::graph, seed, n);
    CHECK(check_graphlike(g).accepted);
    auto t = tree_family(InstanceKind::tree, seed, n);
    CHECK(check_treelike(t).accepted);
    CHECK(check_graphlike(t).accepted);
    auto l = tree_family(InstanceKind::leaf_tree, seed, n, 0.2);
    CHECK(check_leaf_treelike(l).accepted);
  }
}

TEST_CASE("single-value perturbations are caught") {
  const Rational eps[] = {Rational(1, 100), Rational(-1, 100), Rational(1, 3)};
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    auto g = tree_family(InstanceKind::graph, seed, n);
    auto t = tree_family(InstanceKind::tree, seed, n);
    auto l = tree_family(InstanceKind::leaf_tree, seed, n, 0.2);
    for (const auto& s : subsets_of(n, 3)) {
      for (const auto& e : eps) {
        auto pg = g.with_value(s, g.at(s) + e);
        auto vg = check_graphlike(pg);
        CHECK_FALSE(vg.accepted);
        CHECK(confirm_witness(pg, vg));
        auto pt = t.with_value(s, t.at(s) + e);
        auto vt = check_treelike(pt);
        CHECK_FALSE(vt.accepted);
        CHECK(confirm_witness(pt, vt));
        if (l.at(s) + e > 0) {
          auto pl = l.with_value(s, l.at(s) + e);
          auto vl = check_leaf_treelike(pl);
          CHECK_FALSE(vl.accepted);
          CHECK(confirm_witness(pl, vl));
        }
      }
    }
  }
}

TEST_CASE("witness JSON") {
  auto k3 = family_of(oracle::k3_unit());
  auto j = to_json(check_treelike(k3));
  CHECK(j["accepted"] == false);
  CHECK(j["criterion"] == "median");
  auto ok = to_json(check_graphlike(k3));
  CHECK(ok["accepted"] == true);
}

TEST_CASE("confirm_witness refuses accepted verdicts and foreign families") {
  auto k3 = family_of(oracle::k3_unit());
  CHECK_FALSE(confirm_witness(k3, check_graphlike(k3)));
  auto low = k3.with_value(SubsetKey{1, 2, 3}, Rational(3, 2));
  auto v = check_graphlike(low);
  CHECK(confirm_witness(low, v));
  CHECK_FALSE(confirm_witness(k3, v));
}
