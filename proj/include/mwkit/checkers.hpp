#pragma once

#include <span>

#include "mwkit/family.hpp"
#include "mwkit/quartets.hpp"
#include "mwkit/verdict.hpp"

namespace mwkit {

// Every checker needs a complete family and throws IncompleteFamily
// otherwise. Conditions are tested in the order listed; within a condition,
// subsets are visited in SubsetKey order and the first violation is the
// witness.

/// Realizable by a positive-weighted graph with vertex set [n]:
/// triangle inequalities, then D_S = firstprop_min(S) for all #S >= 3.
Verdict check_graphlike(const MultiweightFamily& f);

/// Realizable by a positive-weighted tree with vertex set [n]:
/// 4-point condition, median family, then the same minimum identity.
Verdict check_treelike(const MultiweightFamily& f);

/// Realizable by a nonnegative-weighted tree whose leaves are [n]:
/// 4-point condition, triangle inequalities, D_S = half the pair sum for
/// #S = 3, and the quartet-class formula for #S >= 4.
Verdict check_leaf_treelike(const MultiweightFamily& f);

/// Value the quartet-class formula predicts for S (#S >= 4).
Rational quartet_formula(const PairDistances& d, std::span<const QuartetClass> classes, const SubsetKey& s);

/// Diversity axioms for d(S) = D_S extended by 0 on sets of size <= 1.
/// Exhaustive over all (A, B, C) with B nonempty for n <= 8; above that,
/// 10000 triples drawn with a fixed seed (reported in the verdict note).
Verdict check_diversity(const MultiweightFamily& f);

inline constexpr int kDiversityExhaustiveLimit = 8;
inline constexpr int kDiversitySamples = 10000;

/// Does d(A u C) <= d(A u B) + d(B u C) hold for these sets?
bool diversity_triangle_holds(const MultiweightFamily& f, const LabelSet& a, const LabelSet& b, const LabelSet& c);

/// Re-evaluates a rejection witness against f on its own. True when the
/// recorded violation is reproduced.
bool confirm_witness(const MultiweightFamily& f, const Verdict& v);

}  // namespace mwkit
