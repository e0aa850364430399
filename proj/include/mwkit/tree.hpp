#pragma once

#include <span>
#include <vector>

#include "mwkit/family.hpp"
#include "mwkit/graph.hpp"

namespace mwkit {

/// A weighted graph known to be a tree.
class WeightedTree {
 public:
  /// Throws NotATree when the edge count is not vertex count - 1.
  explicit WeightedTree(WeightedGraph g);

  const WeightedGraph& graph() const noexcept { return graph_; }

  /// Degree-1 vertices; both ends of a single edge are leaves.
  std::vector<VertexId> leaves() const;
  /// Vertices of degree greater than two.
  std::vector<VertexId> nodes() const;
  bool is_leaf(VertexId v) const { return graph_.degree(v) == 1; }
  /// No vertex of degree two.
  bool is_essential() const;

  /// Vertex sequence of the unique path from a to b.
  std::vector<VertexId> path(VertexId a, VertexId b) const;
  Rational distance(VertexId a, VertexId b) const;

  /// Per-edge flag: true when the edge lies on a twig.
  std::vector<bool> twig_flags() const;

  friend bool operator==(const WeightedTree&, const WeightedTree&) = default;

 private:
  WeightedGraph graph_;
};

std::vector<Edge> twig_edges(const WeightedTree& t);
/// Edges on no twig. Empty for stars, single edges and node-free paths.
std::vector<Edge> internal_edges(const WeightedTree& t);

/// Per-vertex flag of the minimal subtree spanning the given vertices.
std::vector<bool> spanning_mask(const WeightedTree& t, std::span<const VertexId> vertices);

/// Minimal subtree containing S with inherited weights. Throws UnknownVertex.
WeightedTree induced_subtree(const WeightedTree& t, const SubsetKey& s);
WeightedTree induced_subtree(const WeightedTree& t, std::span<const VertexId> vertices);

/// Internal edges of t that lie in the minimal subtree of S. Every member of
/// S must be a leaf of t (NotALeaf otherwise). Edges use t's vertex ids.
std::vector<Edge> tilde_edges(const WeightedTree& t, const SubsetKey& s);

/// Suppresses unlabelled degree-2 vertices, summing the merged weights.
/// Labelled vertices are kept whatever their degree.
WeightedTree essentialize(const WeightedTree& t);

/// Weight of the minimal subtree containing S.
Rational multiweight_tree(const WeightedTree& t, const SubsetKey& s);

}  // namespace mwkit
