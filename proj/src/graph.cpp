#include "mwkit/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "mwkit/error.hpp"

namespace mwkit {

namespace {

Label label_of_name(const std::string& name) {
  if (name.empty() || name.size() > 9) return 0;
  if (!std::all_of(name.begin(), name.end(), [](unsigned char c) { return std::isdigit(c); })) return 0;
  if (name.front() == '0') return 0;
  return std::stoi(name);
}

}  // namespace

WeightedGraph::WeightedGraph(std::vector<std::string> names, std::vector<Edge> edges, WeightRegime regime)
    : names_(std::move(names)), edges_(std::move(edges)), regime_(regime) {
  if (names_.empty()) throw Error(ErrorKind::bad_parameters, "graph has no vertices");
  labels_.reserve(names_.size());
  for (VertexId v = 0; v < names_.size(); ++v) {
    const auto& name = names_[v];
    if (name.empty()) throw Error(ErrorKind::syntax_error, "empty vertex name");
    bool digits = std::all_of(name.begin(), name.end(), [](unsigned char c) { return std::isdigit(c); });
    Label l = label_of_name(name);
    if (digits && l == 0) throw Error(ErrorKind::syntax_error, "bad label \"" + name + "\"");
    if (!index_.emplace(name, v).second) throw Error(ErrorKind::syntax_error, "duplicate vertex \"" + name + "\"");
    labels_.push_back(l);
    labelled_count_ += l != 0;
  }

  for (auto& e : edges_) {
    if (e.u >= names_.size() || e.v >= names_.size()) throw Error(ErrorKind::unknown_vertex, "edge endpoint out of range");
    if (e.u == e.v) throw Error(ErrorKind::self_loop, "loop at vertex " + names_[e.u]);
    if (e.u > e.v) std::swap(e.u, e.v);
    bool ok = regime_ == WeightRegime::positive ? e.weight > 0 : e.weight >= 0;
    if (!ok) {
      throw Error(ErrorKind::nonpositive_weight,
                  "edge {" + names_[e.u] + "," + names_[e.v] + "} has weight " + to_string(e.weight));
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw Error(ErrorKind::parallel_edge, "edge {" + names_[edges_[i].u] + "," + names_[edges_[i].v] + "} repeated");
    }
  }

  adjacency_.resize(names_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    adjacency_[edges_[i].u].push_back({edges_[i].v, i});
    adjacency_[edges_[i].v].push_back({edges_[i].u, i});
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end(), [](const Incidence& a, const Incidence& b) { return a.neighbour < b.neighbour; });
  }

  std::vector<bool> seen(names_.size(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (const auto& inc : adjacency_[x]) {
      if (!seen[inc.neighbour]) {
        seen[inc.neighbour] = true;
        stack.push_back(inc.neighbour);
      }
    }
  }
  for (VertexId v = 0; v < names_.size(); ++v) {
    if (!seen[v]) throw Error(ErrorKind::disconnected, "vertex " + names_[v] + " is not reachable from " + names_[0]);
  }
}

bool WeightedGraph::labels_are_contiguous() const noexcept {
  for (Label l = 1; l <= labelled_count_; ++l) {
    if (!index_.contains(std::to_string(l))) return false;
  }
  return true;
}

std::optional<VertexId> WeightedGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> WeightedGraph::find(Label label) const { return find(std::to_string(label)); }

VertexId WeightedGraph::vertex_of(Label label) const {
  auto v = find(label);
  if (!v) throw Error(ErrorKind::unknown_vertex, "no vertex labelled " + std::to_string(label));
  return *v;
}

VertexId WeightedGraph::vertex_of(std::string_view name) const {
  auto v = find(name);
  if (!v) throw Error(ErrorKind::unknown_vertex, "no vertex named \"" + std::string(name) + "\"");
  return *v;
}

std::optional<std::size_t> WeightedGraph::edge_between(VertexId a, VertexId b) const {
  for (const auto& inc : adjacency_.at(a)) {
    if (inc.neighbour == b) return inc.edge;
  }
  return std::nullopt;
}

Rational WeightedGraph::total_weight() const {
  Rational sum = 0;
  for (const auto& e : edges_) sum += e.weight;
  return sum;
}

WeightedGraph validate_graph(const RawGraph& raw) {
  if (raw.n < 1) throw Error(ErrorKind::bad_parameters, "n must be positive");
  std::vector<std::string> names;
  for (int i = 1; i <= raw.n; ++i) names.push_back(std::to_string(i));
  for (const auto& x : raw.extra) {
    if (label_of_name(x) != 0 || x.empty() || std::all_of(x.begin(), x.end(), ::isdigit)) {
      throw Error(ErrorKind::syntax_error, "extra vertex \"" + x + "\" must not be a label");
    }
    names.push_back(x);
  }
  std::unordered_map<std::string, VertexId> index;
  for (VertexId v = 0; v < names.size(); ++v) {
    if (!index.emplace(names[v], v).second) throw Error(ErrorKind::syntax_error, "duplicate vertex \"" + names[v] + "\"");
  }
  auto resolve = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw Error(ErrorKind::unknown_vertex, "edge endpoint \"" + name + "\" is not a vertex");
    return it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(raw.edges.size());
  for (const auto& e : raw.edges) edges.push_back({resolve(e.u), resolve(e.v), e.weight});
  return WeightedGraph(std::move(names), std::move(edges), raw.regime);
}

RawGraph to_raw(const WeightedGraph& g) {
  RawGraph raw;
  raw.regime = g.regime();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.is_labelled(v)) {
      raw.n = std::max(raw.n, g.label(v));
    } else {
      raw.extra.push_back(g.name(v));
    }
  }
  for (const auto& e : g.edges()) raw.edges.push_back({g.name(e.u), g.name(e.v), e.weight});
  return raw;
}

WeightedGraph complete_graph(const PairDistances& d) {
  std::vector<std::string> names;
  for (Label i = 1; i <= d.n(); ++i) names.push_back(std::to_string(i));
  std::vector<Edge> edges;
  for (Label i = 1; i <= d.n(); ++i) {
    for (Label j = i + 1; j <= d.n(); ++j) {
      edges.push_back({static_cast<VertexId>(i - 1), static_cast<VertexId>(j - 1), d(i, j)});
    }
  }
  return WeightedGraph(std::move(names), std::move(edges));
}

}  // namespace mwkit
