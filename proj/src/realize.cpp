#include "mwkit/realize.hpp"

#include <map>
#include <optional>

#include "mwkit/checkers.hpp"
#include "mwkit/quartets.hpp"

namespace mwkit {

namespace {

// Mutable tree used during leaf insertion.
class TreeBuilder {
 public:
  VertexId add_vertex(std::string name, Label label) {
    names_.push_back(std::move(name));
    labels_.push_back(label);
    adj_.emplace_back();
    return names_.size() - 1;
  }

  void connect(VertexId a, VertexId b, const Rational& w) {
    adj_[a][b] = w;
    adj_[b][a] = w;
  }

  void disconnect(VertexId a, VertexId b) {
    adj_[a].erase(b);
    adj_[b].erase(a);
  }

  const std::map<VertexId, Rational>& neighbours(VertexId v) const { return adj_[v]; }
  Label label(VertexId v) const { return labels_[v]; }

  std::vector<VertexId> path(VertexId a, VertexId b) const {
    std::vector<VertexId> parent(names_.size(), names_.size());
    std::vector<VertexId> queue{a};
    parent[a] = a;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& [nb, w] : adj_[queue[head]]) {
        if (parent[nb] == names_.size()) {
          parent[nb] = queue[head];
          queue.push_back(nb);
        }
      }
    }
    std::vector<VertexId> out{b};
    while (out.back() != a) out.push_back(parent[out.back()]);
    std::reverse(out.begin(), out.end());
    return out;
  }

  // Labelled vertices 1..n first, then unlabelled ones in creation order.
  WeightedTree build(WeightRegime regime) const {
    std::vector<VertexId> order;
    std::vector<std::pair<Label, VertexId>> labelled;
    for (VertexId v = 0; v < names_.size(); ++v) {
      if (labels_[v] != 0) labelled.emplace_back(labels_[v], v);
    }
    std::sort(labelled.begin(), labelled.end());
    for (const auto& [l, v] : labelled) order.push_back(v);
    for (VertexId v = 0; v < names_.size(); ++v) {
      if (labels_[v] == 0) order.push_back(v);
    }
    std::vector<VertexId> remap(names_.size());
    std::vector<std::string> names;
    for (std::size_t i = 0; i < order.size(); ++i) {
      remap[order[i]] = i;
      names.push_back(names_[order[i]]);
    }
    std::vector<Edge> edges;
    for (VertexId v = 0; v < names_.size(); ++v) {
      for (const auto& [nb, w] : adj_[v]) {
        if (v < nb) edges.push_back({remap[v], remap[nb], w});
      }
    }
    return WeightedTree(WeightedGraph(std::move(names), std::move(edges), regime));
  }

 private:
  std::vector<std::string> names_;
  std::vector<Label> labels_;
  std::vector<std::map<VertexId, Rational>> adj_;
};

[[noreturn]] void internal(const std::string& what) { throw Error(ErrorKind::internal_error, what); }

}  // namespace

RejectedFamily::RejectedFamily(ErrorKind kind, Verdict verdict)
    : Error(kind, "family rejected at " + verdict.criterion), verdict_(std::move(verdict)) {}

WeightedGraph realize_graph(const MultiweightFamily& f) {
  auto verdict = check_graphlike(f);
  if (!verdict.accepted) throw RejectedFamily(ErrorKind::not_graphlike, std::move(verdict));
  return complete_graph(pairs_of(f));
}

WeightedTree realize_leaf_tree(const PairDistances& d) {
  const int n = d.n();
  if (n < 2) throw Error(ErrorKind::bad_parameters, "need n >= 2");
  for (Label i = 1; i <= n; ++i) {
    for (Label j = i + 1; j <= n; ++j) {
      if (d(i, j) <= 0) throw Error(ErrorKind::nonpositive_value, "D_{" + std::to_string(i) + "," + std::to_string(j) + "} <= 0");
    }
  }
  if (auto v = four_point_check(d); !v.accepted) throw RejectedFamily(ErrorKind::not_four_point, std::move(v));
  if (auto v = triangle_check(d); !v.accepted) throw RejectedFamily(ErrorKind::not_four_point, std::move(v));

  TreeBuilder tree;
  std::vector<VertexId> at(static_cast<std::size_t>(n) + 1);
  int created = 0;
  auto fresh_node = [&] { return tree.add_vertex("v" + std::to_string(++created), 0); };

  at[1] = tree.add_vertex("1", 1);
  at[2] = tree.add_vertex("2", 2);
  tree.connect(at[1], at[2], d(1, 2));

  for (Label k = 3; k <= n; ++k) {
    std::optional<Rational> twig;
    Label bi = 0, bj = 0;
    for (Label i = 1; i < k; ++i) {
      for (Label j = i + 1; j < k; ++j) {
        Rational g = (d(i, k) + d(j, k) - d(i, j)) / 2;
        if (!twig || g < *twig) {
          twig = std::move(g);
          bi = i;
          bj = j;
        }
      }
    }
    if (*twig < 0) internal("negative twig for leaf " + std::to_string(k));
    const Rational along = d(bi, k) - *twig;

    const auto p = tree.path(at[bi], at[bj]);
    std::optional<VertexId> anchor;
    Rational covered = 0;
    for (std::size_t idx = 0; idx < p.size() && !anchor; ++idx) {
      if (covered == along) {
        VertexId x = p[idx];
        if (tree.label(x) == 0) {
          anchor = x;
          break;
        }
        // A label sits here: reuse the node behind a zero twig, or open one.
        const auto& [nb, w] = *tree.neighbours(x).begin();
        if (w == 0 && tree.label(nb) == 0) {
          anchor = nb;
        } else {
          const VertexId other = nb;
          const Rational weight = w;
          VertexId v = fresh_node();
          tree.disconnect(x, other);
          tree.connect(v, other, weight);
          tree.connect(v, x, Rational(0));
          anchor = v;
        }
        break;
      }
      if (idx + 1 == p.size()) break;
      const Rational w = tree.neighbours(p[idx]).at(p[idx + 1]);
      if (covered < along && along < covered + w) {
        VertexId v = fresh_node();
        tree.disconnect(p[idx], p[idx + 1]);
        tree.connect(p[idx], v, along - covered);
        tree.connect(v, p[idx + 1], covered + w - along);
        anchor = v;
        break;
      }
      covered += w;
    }
    if (!anchor) internal("attachment point of leaf " + std::to_string(k) + " is off the path");
    at[k] = tree.add_vertex(std::to_string(k), k);
    tree.connect(*anchor, at[k], *twig);
  }
  return tree.build(WeightRegime::nonnegative);
}

WeightedTree realize_tree(const MultiweightFamily& f) {
  auto verdict = check_treelike(f);
  if (!verdict.accepted) throw RejectedFamily(ErrorKind::not_treelike, std::move(verdict));
  const auto d = pairs_of(f);
  const auto leafy = realize_leaf_tree(d);
  const auto& g = leafy.graph();

  // Each unlabelled node is a median of some triple, hence sits at distance
  // 0 from exactly one label.
  std::vector<VertexId> rep(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    rep[v] = v;
    if (g.is_labelled(v)) continue;
    std::optional<VertexId> label;
    for (const auto& inc : g.neighbours(v)) {
      if (g.is_labelled(inc.neighbour) && g.edges()[inc.edge].weight == 0) {
        if (label) internal("node " + g.name(v) + " carries two labels");
        label = inc.neighbour;
      }
    }
    if (!label) internal("node " + g.name(v) + " has no label at distance 0");
    rep[v] = *label;
  }

  std::vector<std::string> names;
  for (Label l = 1; l <= f.n(); ++l) names.push_back(std::to_string(l));
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    VertexId a = rep[e.u], b = rep[e.v];
    if (a == b) continue;
    if (e.weight == 0) internal("zero-weight edge survives label identification");
    edges.push_back({static_cast<VertexId>(g.label(a) - 1), static_cast<VertexId>(g.label(b) - 1), e.weight});
  }
  return WeightedTree(WeightedGraph(std::move(names), std::move(edges)));
}

}  // namespace mwkit
