#include "mwkit/multiweight.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

#include "mwkit/error.hpp"

namespace mwkit {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Dreyfus-Wagner over the terminal subsets. dp(mask, v) is the cheapest tree
// joining the terminals in mask and the vertex v.
class SteinerSolver {
 public:
  SteinerSolver(const WeightedGraph& g, std::vector<VertexId> terminals)
      : g_(g), terminals_(std::move(terminals)), n_(g.vertex_count()) {
    if (terminals_.size() > 20) throw Error(ErrorKind::too_large, "too many terminals for exact Steiner DP");
    shortest_paths();
    const std::size_t masks = std::size_t{1} << terminals_.size();
    dp_.assign(masks * n_, Rational(0));
    via_.assign(masks * n_, 0);
    split_.assign(masks * n_, 0);

    std::vector<Rational> merged(n_);
    for (std::size_t mask = 1; mask < masks; ++mask) {
      if (std::has_single_bit(mask)) {
        VertexId t = terminals_[std::countr_zero(mask)];
        for (VertexId v = 0; v < n_; ++v) dp(mask, v) = dist(t, v);
        continue;
      }
      const std::size_t low = mask & (~mask + 1);
      for (VertexId u = 0; u < n_; ++u) {
        std::optional<Rational> best;
        std::size_t best_sub = 0;
        // Submasks containing the lowest bit, so each split is seen once.
        for (std::size_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
          if (!(sub & low)) continue;
          Rational c = dp(sub, u) + dp(mask ^ sub, u);
          if (!best || c < *best) {
            best = std::move(c);
            best_sub = sub;
          }
        }
        merged[u] = *best;
        split_[mask * n_ + u] = best_sub;
      }
      for (VertexId v = 0; v < n_; ++v) {
        std::optional<Rational> best;
        VertexId best_u = 0;
        for (VertexId u = 0; u < n_; ++u) {
          Rational c = dist(v, u) + merged[u];
          if (!best || c < *best) {
            best = std::move(c);
            best_u = u;
          }
        }
        dp(mask, v) = *best;
        via_[mask * n_ + v] = best_u;
      }
    }
  }

  std::size_t terminal_count() const { return terminals_.size(); }

  const Rational& value(std::size_t mask) const {
    return dp_[mask * n_ + terminals_[std::countr_zero(mask)]];
  }

  WeightedTree realize(std::size_t mask) const {
    std::vector<std::size_t> edge_ids;
    collect(mask, terminals_[std::countr_zero(mask)], edge_ids);
    std::sort(edge_ids.begin(), edge_ids.end());
    edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()), edge_ids.end());

    // With zero-weight edges the union of paths may close a cycle; keep a
    // spanning forest in edge order, then prune non-terminal leaves.
    DisjointSets sets(n_);
    std::vector<bool> used(n_, false);
    std::vector<Edge> kept;
    for (std::size_t id : edge_ids) {
      const auto& e = g_.edges()[id];
      if (sets.unite(e.u, e.v)) {
        kept.push_back(e);
        used[e.u] = used[e.v] = true;
      }
    }
    for (std::size_t i = 0; i < terminals_.size(); ++i) {
      if (mask >> i & 1U) used[terminals_[i]] = true;
    }
    std::vector<VertexId> remap(n_, n_);
    std::vector<std::string> names;
    for (VertexId v = 0; v < n_; ++v) {
      if (used[v]) {
        remap[v] = names.size();
        names.push_back(g_.name(v));
      }
    }
    for (auto& e : kept) {
      e.u = remap[e.u];
      e.v = remap[e.v];
    }
    WeightedTree tree(WeightedGraph(std::move(names), std::move(kept), g_.regime()));
    std::vector<VertexId> keep_terms;
    for (std::size_t i = 0; i < terminals_.size(); ++i) {
      if (mask >> i & 1U) keep_terms.push_back(remap[terminals_[i]]);
    }
    return induced_subtree(tree, keep_terms);
  }

 private:
  Rational& dp(std::size_t mask, VertexId v) { return dp_[mask * n_ + v]; }
  const Rational& dp(std::size_t mask, VertexId v) const { return dp_[mask * n_ + v]; }
  const Rational& dist(VertexId a, VertexId b) const { return dist_[a * n_ + b]; }

  void shortest_paths() {
    dist_.assign(n_ * n_, Rational(0));
    next_.assign(n_ * n_, n_);
    std::vector<bool> finite(n_ * n_, false);
    for (VertexId v = 0; v < n_; ++v) {
      finite[v * n_ + v] = true;
      next_[v * n_ + v] = v;
    }
    for (const auto& e : g_.edges()) {
      dist_[e.u * n_ + e.v] = dist_[e.v * n_ + e.u] = e.weight;
      finite[e.u * n_ + e.v] = finite[e.v * n_ + e.u] = true;
      next_[e.u * n_ + e.v] = e.v;
      next_[e.v * n_ + e.u] = e.u;
    }
    for (VertexId k = 0; k < n_; ++k) {
      for (VertexId i = 0; i < n_; ++i) {
        if (!finite[i * n_ + k]) continue;
        for (VertexId j = 0; j < n_; ++j) {
          if (!finite[k * n_ + j]) continue;
          Rational c = dist_[i * n_ + k] + dist_[k * n_ + j];
          if (!finite[i * n_ + j] || c < dist_[i * n_ + j]) {
            dist_[i * n_ + j] = std::move(c);
            finite[i * n_ + j] = true;
            next_[i * n_ + j] = next_[i * n_ + k];
          }
        }
      }
    }
  }

  void add_path(VertexId a, VertexId b, std::vector<std::size_t>& out) const {
    while (a != b) {
      VertexId step = next_[a * n_ + b];
      out.push_back(*g_.edge_between(a, step));
      a = step;
    }
  }

  void collect(std::size_t mask, VertexId v, std::vector<std::size_t>& out) const {
    if (std::has_single_bit(mask)) {
      add_path(v, terminals_[std::countr_zero(mask)], out);
      return;
    }
    VertexId u = via_[mask * n_ + v];
    add_path(v, u, out);
    std::size_t sub = split_[mask * n_ + u];
    collect(sub, u, out);
    collect(mask ^ sub, u, out);
  }

  const WeightedGraph& g_;
  std::vector<VertexId> terminals_;
  std::size_t n_;
  std::vector<Rational> dist_;
  std::vector<VertexId> next_;
  std::vector<Rational> dp_;
  std::vector<VertexId> via_;
  std::vector<std::size_t> split_;
};

std::vector<VertexId> terminals_of(const WeightedGraph& g, const SubsetKey& s) {
  std::vector<VertexId> out;
  for (Label l : s.members()) out.push_back(g.vertex_of(l));
  return out;
}

void check_terminals(const WeightedGraph& g, std::span<const VertexId> terminals) {
  if (terminals.size() < 2) throw Error(ErrorKind::bad_parameters, "need at least two terminals");
  for (VertexId v : terminals) {
    if (v >= g.vertex_count()) throw Error(ErrorKind::unknown_vertex, "terminal id out of range");
  }
  std::vector<VertexId> sorted(terminals.begin(), terminals.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::bad_parameters, "repeated terminal");
  }
}

// Prim on the complete graph over the labels in mask.
Rational mst_weight(const PairDistances& d, std::uint64_t mask) {
  std::vector<Label> members;
  for (int i = 0; i < d.n(); ++i) {
    if (mask >> i & 1U) members.push_back(i + 1);
  }
  if (members.size() < 2) return Rational(0);
  std::vector<bool> in_tree(members.size(), false);
  std::vector<Rational> best(members.size());
  in_tree[0] = true;
  for (std::size_t j = 1; j < members.size(); ++j) best[j] = d(members[0], members[j]);
  Rational total = 0;
  for (std::size_t step = 1; step < members.size(); ++step) {
    std::size_t pick = members.size();
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (!in_tree[j] && (pick == members.size() || best[j] < best[pick])) pick = j;
    }
    in_tree[pick] = true;
    total += best[pick];
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (!in_tree[j] && d(members[pick], members[j]) < best[j]) best[j] = d(members[pick], members[j]);
    }
  }
  return total;
}

}  // namespace

SteinerResult multiweight_graph(const WeightedGraph& g, std::span<const VertexId> terminals) {
  check_terminals(g, terminals);
  SteinerSolver solver(g, std::vector<VertexId>(terminals.begin(), terminals.end()));
  const std::size_t full = (std::size_t{1} << terminals.size()) - 1;
  return {solver.value(full), solver.realize(full)};
}

SteinerResult multiweight_graph(const WeightedGraph& g, const SubsetKey& s) {
  auto t = terminals_of(g, s);
  return multiweight_graph(g, t);
}

Rational multiweight_oracle(const WeightedGraph& g, std::span<const VertexId> terminals) {
  check_terminals(g, terminals);
  const std::size_t n = g.vertex_count();
  if (n > 12) throw Error(ErrorKind::too_large, "oracle limited to 12 vertices, graph has " + std::to_string(n));
  std::uint32_t required = 0;
  for (VertexId v : terminals) required |= std::uint32_t{1} << v;

  std::optional<Rational> best;
  for (std::uint32_t vs = 0; vs < (std::uint32_t{1} << n); ++vs) {
    if ((vs & required) != required) continue;
    // Kruskal over the induced edges; connected iff it joins every vertex.
    DisjointSets sets(n);
    Rational weight = 0;
    std::size_t joined = 0;
    std::vector<const Edge*> induced;
    for (const auto& e : g.edges()) {
      if ((vs >> e.u & 1U) && (vs >> e.v & 1U)) induced.push_back(&e);
    }
    std::stable_sort(induced.begin(), induced.end(), [](const Edge* a, const Edge* b) { return a->weight < b->weight; });
    for (const Edge* e : induced) {
      if (sets.unite(e->u, e->v)) {
        weight += e->weight;
        ++joined;
      }
    }
    if (joined + 1 != static_cast<std::size_t>(std::popcount(vs))) continue;
    if (!best || weight < *best) best = weight;
  }
  return *best;
}

Rational multiweight_oracle(const WeightedGraph& g, const SubsetKey& s) {
  auto t = terminals_of(g, s);
  return multiweight_oracle(g, t);
}

MultiweightFamily family_of(const WeightedGraph& g) {
  const int n = g.labelled_count();
  if (n < 2 || !g.labels_are_contiguous()) {
    throw Error(ErrorKind::bad_parameters, "family_of needs labelled vertices 1..n with n >= 2");
  }
  std::vector<VertexId> terminals;
  for (Label l = 1; l <= n; ++l) terminals.push_back(g.vertex_of(l));
  SteinerSolver solver(g, terminals);
  std::map<SubsetKey, Rational> values;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    if (std::popcount(mask) >= 2) values.emplace(SubsetKey::from_mask(mask), solver.value(mask));
  }
  return MultiweightFamily(n, std::move(values));
}

MultiweightFamily family_of(const WeightedTree& t) {
  const auto& g = t.graph();
  const int n = g.labelled_count();
  if (n < 2 || !g.labels_are_contiguous()) {
    throw Error(ErrorKind::bad_parameters, "family_of needs labelled vertices 1..n with n >= 2");
  }
  std::map<SubsetKey, Rational> values;
  for (auto& s : subsets_of(n)) {
    Rational v = multiweight_tree(t, s);
    values.emplace(std::move(s), std::move(v));
  }
  return MultiweightFamily(n, std::move(values));
}

// A tree over a vertex superset U of S with a leaf outside S can lose that
// leaf and get strictly lighter (2-weights are positive), so the constrained
// minimum equals the minimum spanning tree weight minimised over all U with
// S <= U <= [n].
Rational firstprop_min(const PairDistances& d, const SubsetKey& s) {
  if (s.size() < 3) throw Error(ErrorKind::bad_parameters, "needs #S >= 3");
  if (s.members().back() > d.n()) throw Error(ErrorKind::unknown_vertex, "subset " + s.to_string() + " outside [n]");
  if (d.n() > 30) throw Error(ErrorKind::too_large, "n too large");
  const std::uint64_t base = s.mask();
  const std::uint64_t free = ((std::uint64_t{1} << d.n()) - 1) & ~base;
  std::optional<Rational> best;
  for (std::uint64_t extra = free;; extra = (extra - 1) & free) {
    Rational w = mst_weight(d, base | extra);
    if (!best || w < *best) best = std::move(w);
    if (extra == 0) break;
  }
  return *best;
}

Rational firstprop_min(const MultiweightFamily& pairs, const SubsetKey& s) {
  return firstprop_min(pairs_of(pairs), s);
}

std::vector<Rational> firstprop_table(const PairDistances& d) {
  if (d.n() > 24) throw Error(ErrorKind::too_large, "firstprop table limited to n <= 24");
  const std::size_t masks = std::size_t{1} << d.n();
  std::vector<Rational> best(masks);
  for (std::size_t m = 0; m < masks; ++m) best[m] = mst_weight(d, m);
  // Minimum over supersets, one label at a time.
  for (int i = 0; i < d.n(); ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t m = 0; m < masks; ++m) {
      if (!(m & bit) && std::popcount(m) >= 2 && best[m | bit] < best[m]) best[m] = best[m | bit];
    }
  }
  return best;
}

}  // namespace mwkit
