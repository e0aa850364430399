#pragma once

#include <span>
#include <vector>

#include "mwkit/family.hpp"
#include "mwkit/graph.hpp"
#include "mwkit/tree.hpp"

namespace mwkit {

struct SteinerResult {
  Rational value;
  /// A minimum-weight connected subgraph containing S; a subtree of the input.
  WeightedTree realizing_tree;
};

/// Exact minimum weight of a connected subgraph whose vertex set contains S,
/// by dynamic programming over subsets of S. Vertices outside S, labelled or
/// not, are optional Steiner points.
SteinerResult multiweight_graph(const WeightedGraph& g, const SubsetKey& s);
SteinerResult multiweight_graph(const WeightedGraph& g, std::span<const VertexId> terminals);

/// Same value by brute force: every vertex superset of S that induces a
/// connected subgraph, minimum spanning tree inside it. At most 12 vertices.
Rational multiweight_oracle(const WeightedGraph& g, const SubsetKey& s);
Rational multiweight_oracle(const WeightedGraph& g, std::span<const VertexId> terminals);

/// D_S for every S in ([n] choose >= 2). The labelled vertices of g must be
/// exactly 1..n with n >= 2.
MultiweightFamily family_of(const WeightedGraph& g);
MultiweightFamily family_of(const WeightedTree& t);

/// Minimum of sum_{I in X} D_I over edge sets X of the complete graph on [n]
/// that form a tree with leaves in S and vertex set containing S. Uses only
/// the 2-weights. Requires #S >= 3.
Rational firstprop_min(const PairDistances& d, const SubsetKey& s);
Rational firstprop_min(const MultiweightFamily& pairs, const SubsetKey& s);

/// firstprop_min for every subset at once, indexed by SubsetKey::mask().
/// Entries for subsets with fewer than two members are unspecified.
std::vector<Rational> firstprop_table(const PairDistances& d);

}  // namespace mwkit
