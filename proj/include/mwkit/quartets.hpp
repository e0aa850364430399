#pragma once

#include <array>
#include <map>
#include <span>
#include <vector>

#include "mwkit/error.hpp"
#include "mwkit/family.hpp"
#include "mwkit/verdict.hpp"

namespace mwkit {

using Quartet = std::array<Label, 4>;
using Triple = std::array<Label, 3>;

/// Accepts iff D_ij <= D_ik + D_jk for every triple.
Verdict triangle_check(const PairDistances& d);

/// Accepts iff in every 4-subset the largest of the three pair sums occurs at
/// least twice.
Verdict four_point_check(const PairDistances& d);

/// Unique median of each triple, keyed by the ascending triple.
using MedianMap = std::map<Triple, Label>;

struct MedianCheck {
  Verdict verdict;
  MedianMap medians;  // complete only when accepted
};

/// A median of {a,b,c} is m in [n] with D_ij = D_im + D_jm for all distinct
/// i, j in the triple, taking D_xx = 0 so a member of the triple qualifies.
MedianCheck median_check(const PairDistances& d);

enum class QuartetShape { split, degenerate };

struct QuartetSplit {
  Quartet labels;
  QuartetShape shape = QuartetShape::degenerate;
  /// The pairing {left | right} when split; each side ascending and left
  /// holding the smallest label.
  std::array<Label, 2> left{};
  std::array<Label, 2> right{};
  /// ab+cd, ac+bd, ad+bc for labels (a, b, c, d) in the order given.
  std::array<Rational, 3> sums;
};

/// Raised when the maximum pair sum is attained only once.
class NotTreelikeQuartet : public Error {
 public:
  NotTreelikeQuartet(Quartet q, std::array<Rational, 3> sums);
  const Quartet& quartet() const noexcept { return quartet_; }
  const std::array<Rational, 3>& sums() const noexcept { return sums_; }

 private:
  Quartet quartet_;
  std::array<Rational, 3> sums_;
};

/// Split when one pair sum is strictly below the other two, which are equal;
/// Degenerate when all three are equal; NotTreelikeQuartet otherwise.
QuartetSplit quartet_split(const PairDistances& d, const Quartet& q);

/// L^{a,b,c,d}_{a,b}: a, b and every other x with D_xz - D_az constant over
/// z in {b,c,d}, or D_xz - D_bz constant over z in {a,c,d}.
LabelSet l_set(const PairDistances& d, const Quartet& q);

/// Equivalence class of ordered quartets (a,b,c,d) with
/// D_ab + D_cd < D_ac + D_bd = D_ad + D_bc and L_ab u L_cd = [n], grouped by
/// the unordered pair {L_ab, L_cd}.
struct QuartetClass {
  LabelSet first;   // the lexicographically smaller L-set
  LabelSet second;
  Rational bridge_length;  // (D_ac + D_bd - D_ab - D_cd) / 2
  std::vector<Quartet> representatives;
};

class InconsistentClassError : public Error {
 public:
  InconsistentClassError(Quartet a, Rational length_a, Quartet b, Rational length_b);
  const Quartet& first() const noexcept { return first_; }
  const Quartet& second() const noexcept { return second_; }
  const Rational& first_length() const noexcept { return first_length_; }
  const Rational& second_length() const noexcept { return second_length_; }

 private:
  Quartet first_, second_;
  Rational first_length_, second_length_;
};

/// All classes, ordered by (first, second). Empty when n < 4. Throws
/// InconsistentClassError when two representatives of a class disagree on
/// the bridge length.
std::vector<QuartetClass> q_classes(const PairDistances& d);

struct ClassShare {
  std::size_t class_index;  // into the q_classes result
  std::int64_t q;           // #(first n S) * #(second n S)
};

/// Classes whose L-sets both meet S, with q(S).
std::vector<ClassShare> q_for_subset(std::span<const QuartetClass> classes, const SubsetKey& s);

}  // namespace mwkit
