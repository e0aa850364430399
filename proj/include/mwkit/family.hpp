#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mwkit/rational.hpp"

namespace mwkit {

/// Labels are 1..n. A LabelSet is a strictly increasing list of labels.
using Label = int;
using LabelSet = std::vector<Label>;

/// A subset of [n] with at least two members, stored sorted.
///
/// Keys order by size first and lexicographically within a size, so walking a
/// family visits all pairs, then all triples, and so on.
class SubsetKey {
 public:
  SubsetKey() = default;
  SubsetKey(std::initializer_list<Label> labels);
  explicit SubsetKey(LabelSet labels);

  /// Bit i-1 set for each member i.
  static SubsetKey from_mask(std::uint64_t mask);

  const LabelSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(Label label) const;
  std::uint64_t mask() const;
  std::string to_string() const;

  friend bool operator==(const SubsetKey&, const SubsetKey&) = default;
  friend std::strong_ordering operator<=>(const SubsetKey& a, const SubsetKey& b);

 private:
  LabelSet members_;
};

/// Parses "1,3,4" (whitespace tolerated); members must be ascending.
SubsetKey parse_subset_key(const std::string& text);

/// All subsets of [n] with at least min_size members, in SubsetKey order.
std::vector<SubsetKey> subsets_of(int n, int min_size = 2);

enum class Completeness { partial, pairs, full };

/// Positive values indexed by subsets of [n].
class MultiweightFamily {
 public:
  MultiweightFamily(int n, std::map<SubsetKey, Rational> values);

  int n() const noexcept { return n_; }
  const std::map<SubsetKey, Rational>& values() const noexcept { return values_; }
  Completeness completeness() const noexcept { return completeness_; }
  bool is_complete() const noexcept { return completeness_ == Completeness::full; }

  std::optional<Rational> find(const SubsetKey& s) const;
  /// Throws MissingPair for an absent pair, IncompleteFamily otherwise.
  const Rational& at(const SubsetKey& s) const;

  /// Copy with one entry replaced (or added).
  MultiweightFamily with_value(const SubsetKey& s, const Rational& value) const;

  friend bool operator==(const MultiweightFamily&, const MultiweightFamily&) = default;

 private:
  int n_;
  std::map<SubsetKey, Rational> values_;
  Completeness completeness_;
};

/// Dense symmetric matrix of 2-weights, with d(x, x) = 0.
class PairDistances {
 public:
  explicit PairDistances(int n);

  int n() const noexcept { return n_; }
  const Rational& operator()(Label i, Label j) const { return d_[index(i, j)]; }
  void set(Label i, Label j, const Rational& value);

 private:
  std::size_t index(Label i, Label j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1);
  }

  int n_;
  std::vector<Rational> d_;
};

/// Throws MissingPair naming the first absent 2-subset.
PairDistances pairs_of(const MultiweightFamily& f);

/// Family holding only the 2-subsets of d.
MultiweightFamily family_from_pairs(const PairDistances& d);

}  // namespace mwkit
