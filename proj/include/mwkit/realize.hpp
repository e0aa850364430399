#pragma once

#include "mwkit/error.hpp"
#include "mwkit/family.hpp"
#include "mwkit/graph.hpp"
#include "mwkit/tree.hpp"
#include "mwkit/verdict.hpp"

namespace mwkit {

/// Raised when a realizer's input fails its checker; carries the verdict.
class RejectedFamily : public Error {
 public:
  RejectedFamily(ErrorKind kind, Verdict verdict);
  const Verdict& verdict() const noexcept { return verdict_; }

 private:
  Verdict verdict_;
};

/// Complete graph on [n] with w({i,j}) = D_ij. Throws RejectedFamily
/// (NotGraphlike) unless check_graphlike accepts.
WeightedGraph realize_graph(const MultiweightFamily& f);

/// Tree with the given 2-weights as leaf-to-leaf distances.
///
/// Leaves are inserted in ascending label order. Leaf k hangs off the pair
/// (i, j) minimising (D_ik + D_jk - D_ij) / 2, which is its twig length, at
/// distance D_ik minus that twig from i along p(i, j). New vertices are named
/// v1, v2, ... in creation order. Every label is a leaf; twigs may weigh 0
/// but internal edges are positive and the tree is essential. Throws
/// RejectedFamily (NotFourPoint) unless the 4-point condition and the
/// triangle inequalities hold.
WeightedTree realize_leaf_tree(const PairDistances& d);

/// Positive-weighted tree with vertex set exactly [n] and family f. Built by
/// realize_leaf_tree, then each unlabelled node is merged with the label
/// hanging off it by a zero-weight twig. Throws RejectedFamily (NotTreelike)
/// unless check_treelike accepts.
WeightedTree realize_tree(const MultiweightFamily& f);

}  // namespace mwkit
