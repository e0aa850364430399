#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "mwkit/family.hpp"
#include "mwkit/rational.hpp"

namespace mwkit {

/// What a rejection points at. Which fields are filled depends on the
/// criterion:
///   triangle-inequality  labels = (i, j, k) with D_ij > D_ik + D_jk;
///                        found = D_ij, expected = D_ik + D_jk
///   four-point           labels = quartet; sums = (ab+cd, ac+bd, ad+bc)
///   median               labels = triple; candidates = labels m that
///                        split the triple (empty or more than one)
///   pair-steiner-minimum, three-weight-half-sum, quartet-formula
///                        labels = S; found = D_S; expected = formula value
///   quartet-class-consistency
///                        quartets = two representatives of one class;
///                        sums = their bridge lengths
///   diversity-triangle   sets = (A, B, C); found = d(A u C),
///                        expected = d(A u B) + d(B u C)
struct Witness {
  std::vector<Label> labels;
  std::optional<Rational> expected;
  std::optional<Rational> found;
  std::vector<Rational> sums;
  std::vector<Label> candidates;
  std::vector<std::vector<Label>> quartets;
  std::vector<LabelSet> sets;
  std::string message;
};

struct Verdict {
  bool accepted = true;
  std::string check;      // which decider ran: "graphlike", "four-point", ...
  std::string criterion;  // failing condition; empty when accepted
  std::optional<Witness> witness;
  std::string note;

  static Verdict accept(std::string check, std::string note = {});
  static Verdict reject(std::string check, std::string criterion, Witness witness);
};

nlohmann::json to_json(const Verdict& v);

}  // namespace mwkit
