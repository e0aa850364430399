#pragma once

#include <cstdint>

#include "mwkit/graph.hpp"

namespace mwkit {

enum class InstanceKind { graph, tree, leaf_tree };

struct GenOptions {
  InstanceKind kind = InstanceKind::graph;
  int n = 5;
  std::uint64_t seed = 1;
  /// Weights are k/16 with k drawn uniformly from [min_k, max_k].
  int min_k = 1;
  int max_k = 64;
  /// graph kind: chance of each non-tree pair becoming an edge.
  double extra_edge_probability = 0.3;
  /// leaf_tree kind: chance of a twig weighing 0 (at most one per node).
  double zero_twig_probability = 0.0;
  int cap = 16;
};

/// Random connected instance, reproducible from the seed.
///   graph:     vertex set [n], random spanning tree plus extra edges
///   tree:      random positive-weighted tree with vertex set [n]
///   leaf_tree: essential tree with leaf set [n], unlabelled nodes v1, v2, ...
/// Throws BadParameters for n < 2, n > cap or an empty weight range.
WeightedGraph generate(const GenOptions& options);

}  // namespace mwkit
