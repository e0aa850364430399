#include "mwkit/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "mwkit/error.hpp"

namespace mwkit {

namespace {

struct Draw {
  std::mt19937_64 rng;
  int min_k;
  int max_k;

  Rational weight() { return Rational(std::uniform_int_distribution<int>(min_k, max_k)(rng), 16); }
  std::size_t index(std::size_t size) { return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng); }
};

std::vector<Label> shuffled_labels(int n, Draw& draw) {
  std::vector<Label> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  std::shuffle(labels.begin(), labels.end(), draw.rng);
  return labels;
}

std::vector<std::string> label_names(int n) {
  std::vector<std::string> names;
  for (Label l = 1; l <= n; ++l) names.push_back(std::to_string(l));
  return names;
}

WeightedGraph random_labelled_graph(const GenOptions& o, Draw& draw, bool tree_only) {
  const auto order = shuffled_labels(o.n, draw);
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> present(o.n, std::vector<bool>(o.n, false));
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto a = static_cast<VertexId>(order[i] - 1);
    const auto b = static_cast<VertexId>(order[draw.index(i)] - 1);
    edges.push_back({a, b, draw.weight()});
    present[a][b] = present[b][a] = true;
  }
  if (!tree_only) {
    for (VertexId a = 0; a < static_cast<VertexId>(o.n); ++a) {
      for (VertexId b = a + 1; b < static_cast<VertexId>(o.n); ++b) {
        if (!present[a][b] && draw.chance(o.extra_edge_probability)) edges.push_back({a, b, draw.weight()});
      }
    }
  }
  return WeightedGraph(label_names(o.n), std::move(edges));
}

WeightedGraph random_leaf_tree(const GenOptions& o, Draw& draw) {
  const auto labels = shuffled_labels(o.n, draw);
  if (o.n == 2) return WeightedGraph(label_names(2), {{0, 1, draw.weight()}});

  // Vertex ids: 0..n-1 are labels 1..n, then nodes in creation order.
  std::size_t node_count = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<VertexId> nodes;
  auto new_node = [&] {
    VertexId v = static_cast<VertexId>(o.n) + node_count++;
    nodes.push_back(v);
    return v;
  };
  const VertexId centre = new_node();
  for (int i = 0; i < 3; ++i) edges.emplace_back(centre, static_cast<VertexId>(labels[i] - 1));
  for (int i = 3; i < o.n; ++i) {
    const auto leaf = static_cast<VertexId>(labels[i] - 1);
    if (draw.chance(1.0 / 3.0)) {
      edges.emplace_back(nodes[draw.index(nodes.size())], leaf);
    } else {
      const std::size_t pick = draw.index(edges.size());
      const auto [a, b] = edges[pick];
      const VertexId mid = new_node();
      edges[pick] = {a, mid};
      edges.emplace_back(mid, b);
      edges.emplace_back(mid, leaf);
    }
  }

  std::vector<std::string> names = label_names(o.n);
  for (std::size_t i = 1; i <= node_count; ++i) names.push_back("v" + std::to_string(i));
  std::vector<bool> has_zero_twig(names.size(), false);
  std::vector<Edge> out;
  for (const auto& [a, b] : edges) {
    const bool twig = a < static_cast<VertexId>(o.n) || b < static_cast<VertexId>(o.n);
    const VertexId node = std::max(a, b);
    Rational w = draw.weight();
    if (twig && o.zero_twig_probability > 0 && !has_zero_twig[node] && draw.chance(o.zero_twig_probability)) {
      has_zero_twig[node] = true;
      w = 0;
    }
    out.push_back({a, b, w});
  }
  return WeightedGraph(std::move(names), std::move(out), WeightRegime::nonnegative);
}

}  // namespace

WeightedGraph generate(const GenOptions& o) {
  if (o.n < 2 || o.n > o.cap) {
    throw Error(ErrorKind::bad_parameters, "n must be in [2, " + std::to_string(o.cap) + "], got " + std::to_string(o.n));
  }
  if (o.min_k < 1 || o.max_k < o.min_k) throw Error(ErrorKind::bad_parameters, "weight range must satisfy 1 <= min <= max");
  if (o.extra_edge_probability < 0 || o.extra_edge_probability > 1 || o.zero_twig_probability < 0 ||
      o.zero_twig_probability > 1) {
    throw Error(ErrorKind::bad_parameters, "probabilities must lie in [0, 1]");
  }
  Draw draw{std::mt19937_64(o.seed), o.min_k, o.max_k};
  switch (o.kind) {
    case InstanceKind::graph: return random_labelled_graph(o, draw, false);
    case InstanceKind::tree: return random_labelled_graph(o, draw, true);
    case InstanceKind::leaf_tree: return random_leaf_tree(o, draw);
  }
  throw Error(ErrorKind::bad_parameters, "unknown instance kind");
}

}  // namespace mwkit
