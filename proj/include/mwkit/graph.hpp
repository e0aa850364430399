#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mwkit/family.hpp"
#include "mwkit/rational.hpp"

namespace mwkit {

using VertexId = std::size_t;

enum class WeightRegime { positive, nonnegative };

struct Edge {
  VertexId u = 0;  // u < v
  VertexId v = 0;
  Rational weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbour;
  std::size_t edge;
};

/// Simple connected graph with exact weights.
///
/// Vertices are identified by name. A name made only of digits is a label
/// (the labelled vertex of that number); any other name is an unlabelled
/// vertex such as "v1". Vertex ids are positions in the name list, and edges
/// are kept sorted by (u, v).
class WeightedGraph {
 public:
  /// Validates: no loops, no parallel edges, connected, weights in regime.
  WeightedGraph(std::vector<std::string> names, std::vector<Edge> edges,
                WeightRegime regime = WeightRegime::positive);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  bool is_labelled(VertexId v) const { return labels_.at(v) != 0; }
  /// 0 for unlabelled vertices.
  Label label(VertexId v) const { return labels_.at(v); }
  /// Number of labelled vertices present.
  int labelled_count() const noexcept { return labelled_count_; }
  /// True when the labelled vertices are exactly 1..labelled_count().
  bool labels_are_contiguous() const noexcept;

  std::optional<VertexId> find(std::string_view name) const;
  std::optional<VertexId> find(Label label) const;
  /// Throws UnknownVertex.
  VertexId vertex_of(Label label) const;
  VertexId vertex_of(std::string_view name) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Incidence> neighbours(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  std::optional<std::size_t> edge_between(VertexId a, VertexId b) const;
  WeightRegime regime() const noexcept { return regime_; }
  Rational total_weight() const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_ && a.regime_ == b.regime_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Label> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_map<std::string, VertexId> index_;
  WeightRegime regime_;
  int labelled_count_ = 0;
};

/// Parsed graph before validation; endpoints are vertex names.
struct RawGraph {
  int n = 0;
  std::vector<std::string> extra;
  struct RawEdge {
    std::string u, v;
    Rational weight;
  };
  std::vector<RawEdge> edges;
  WeightRegime regime = WeightRegime::positive;
};

/// Resolves names and builds the graph with vertices 1..n followed by the
/// extra vertices in file order. Throws UnknownVertex, SelfLoop,
/// ParallelEdge, NonpositiveWeight, Disconnected.
WeightedGraph validate_graph(const RawGraph& raw);

RawGraph to_raw(const WeightedGraph& g);

/// Complete graph on [n] weighted by the 2-weights.
WeightedGraph complete_graph(const PairDistances& d);

}  // namespace mwkit
