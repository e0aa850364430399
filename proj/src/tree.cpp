#include "mwkit/tree.hpp"

#include <algorithm>

#include "mwkit/error.hpp"

namespace mwkit {

WeightedTree::WeightedTree(WeightedGraph g) : graph_(std::move(g)) {
  if (graph_.edges().size() + 1 != graph_.vertex_count()) {
    throw Error(ErrorKind::not_a_tree, std::to_string(graph_.vertex_count()) + " vertices but " +
                                           std::to_string(graph_.edges().size()) + " edges");
  }
}

std::vector<VertexId> WeightedTree::leaves() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
    if (graph_.degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> WeightedTree::nodes() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
    if (graph_.degree(v) > 2) out.push_back(v);
  }
  return out;
}

bool WeightedTree::is_essential() const {
  for (VertexId v = 0; v < graph_.vertex_count(); ++v) {
    if (graph_.degree(v) == 2) return false;
  }
  return true;
}

std::vector<VertexId> WeightedTree::path(VertexId a, VertexId b) const {
  const auto n = graph_.vertex_count();
  if (a >= n || b >= n) throw Error(ErrorKind::unknown_vertex, "path endpoint out of range");
  std::vector<VertexId> parent(n, n);
  std::vector<VertexId> queue{a};
  parent[a] = a;
  for (std::size_t head = 0; head < queue.size() && parent[b] == n; ++head) {
    for (const auto& inc : graph_.neighbours(queue[head])) {
      if (parent[inc.neighbour] == n) {
        parent[inc.neighbour] = queue[head];
        queue.push_back(inc.neighbour);
      }
    }
  }
  std::vector<VertexId> out{b};
  while (out.back() != a) out.push_back(parent[out.back()]);
  std::reverse(out.begin(), out.end());
  return out;
}

Rational WeightedTree::distance(VertexId a, VertexId b) const {
  auto p = path(a, b);
  Rational sum = 0;
  for (std::size_t i = 1; i < p.size(); ++i) sum += graph_.edges()[*graph_.edge_between(p[i - 1], p[i])].weight;
  return sum;
}

std::vector<bool> WeightedTree::twig_flags() const {
  std::vector<bool> twig(graph_.edges().size(), false);
  for (VertexId leaf : leaves()) {
    VertexId prev = leaf;
    VertexId cur = leaf;
    // Walk inward until the first node (degree > 2) or the far end of a path.
    do {
      const Incidence* next = nullptr;
      for (const auto& inc : graph_.neighbours(cur)) {
        if (inc.neighbour != prev || cur == leaf) {
          next = &inc;
          break;
        }
      }
      if (next == nullptr) break;
      twig[next->edge] = true;
      prev = cur;
      cur = next->neighbour;
    } while (graph_.degree(cur) == 2);
  }
  return twig;
}

std::vector<Edge> twig_edges(const WeightedTree& t) {
  std::vector<Edge> out;
  auto flags = t.twig_flags();
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.push_back(t.graph().edges()[i]);
  }
  return out;
}

std::vector<Edge> internal_edges(const WeightedTree& t) {
  std::vector<Edge> out;
  auto flags = t.twig_flags();
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (!flags[i]) out.push_back(t.graph().edges()[i]);
  }
  return out;
}

std::vector<bool> spanning_mask(const WeightedTree& t, std::span<const VertexId> vertices) {
  const auto& g = t.graph();
  std::vector<bool> keep(g.vertex_count(), true);
  std::vector<bool> required(g.vertex_count(), false);
  for (VertexId v : vertices) {
    if (v >= g.vertex_count()) throw Error(ErrorKind::unknown_vertex, "vertex id out of range");
    required[v] = true;
  }
  if (vertices.empty()) return std::vector<bool>(g.vertex_count(), false);

  std::vector<std::size_t> degree(g.vertex_count());
  std::vector<VertexId> prune;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    degree[v] = g.degree(v);
    if (degree[v] <= 1 && !required[v]) prune.push_back(v);
  }
  while (!prune.empty()) {
    VertexId v = prune.back();
    prune.pop_back();
    if (!keep[v]) continue;
    keep[v] = false;
    for (const auto& inc : g.neighbours(v)) {
      if (keep[inc.neighbour] && --degree[inc.neighbour] <= 1 && !required[inc.neighbour]) {
        prune.push_back(inc.neighbour);
      }
    }
  }
  return keep;
}

WeightedTree induced_subtree(const WeightedTree& t, std::span<const VertexId> vertices) {
  const auto& g = t.graph();
  auto keep = spanning_mask(t, vertices);
  std::vector<VertexId> remap(g.vertex_count(), g.vertex_count());
  std::vector<std::string> names;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) {
      remap[v] = names.size();
      names.push_back(g.name(v));
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) edges.push_back({remap[e.u], remap[e.v], e.weight});
  }
  return WeightedTree(WeightedGraph(std::move(names), std::move(edges), g.regime()));
}

WeightedTree induced_subtree(const WeightedTree& t, const SubsetKey& s) {
  std::vector<VertexId> vs;
  for (Label l : s.members()) vs.push_back(t.graph().vertex_of(l));
  return induced_subtree(t, vs);
}

std::vector<Edge> tilde_edges(const WeightedTree& t, const SubsetKey& s) {
  const auto& g = t.graph();
  std::vector<VertexId> vs;
  for (Label l : s.members()) {
    VertexId v = g.vertex_of(l);
    if (!t.is_leaf(v)) throw Error(ErrorKind::not_a_leaf, "vertex " + std::to_string(l) + " is not a leaf");
    vs.push_back(v);
  }
  auto keep = spanning_mask(t, vs);
  auto twig = t.twig_flags();
  std::vector<Edge> out;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    if (!twig[i] && keep[e.u] && keep[e.v]) out.push_back(e);
  }
  return out;
}

WeightedTree essentialize(const WeightedTree& t) {
  const auto& g = t.graph();
  auto suppressed = [&](VertexId v) { return !g.is_labelled(v) && g.degree(v) == 2; };

  std::vector<VertexId> remap(g.vertex_count(), g.vertex_count());
  std::vector<std::string> names;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!suppressed(v)) {
      remap[v] = names.size();
      names.push_back(g.name(v));
    }
  }

  std::vector<Edge> edges;
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (suppressed(start)) continue;
    for (const auto& first : g.neighbours(start)) {
      VertexId prev = start;
      VertexId cur = first.neighbour;
      Rational weight = g.edges()[first.edge].weight;
      while (suppressed(cur)) {
        for (const auto& inc : g.neighbours(cur)) {
          if (inc.neighbour != prev) {
            weight += g.edges()[inc.edge].weight;
            prev = cur;
            cur = inc.neighbour;
            break;
          }
        }
      }
      if (start < cur) edges.push_back({remap[start], remap[cur], weight});
    }
  }
  return WeightedTree(WeightedGraph(std::move(names), std::move(edges), g.regime()));
}

Rational multiweight_tree(const WeightedTree& t, const SubsetKey& s) {
  std::vector<VertexId> vs;
  for (Label l : s.members()) vs.push_back(t.graph().vertex_of(l));
  auto keep = spanning_mask(t, vs);
  Rational sum = 0;
  for (const auto& e : t.graph().edges()) {
    if (keep[e.u] && keep[e.v]) sum += e.weight;
  }
  return sum;
}

}  // namespace mwkit
