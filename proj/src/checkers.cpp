#include "mwkit/checkers.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>

#include "mwkit/error.hpp"
#include "mwkit/multiweight.hpp"

namespace mwkit {

namespace {

void require_complete(const MultiweightFamily& f) {
  if (!f.is_complete()) {
    throw Error(ErrorKind::incomplete_family,
                "checker needs all " + std::to_string((std::size_t{1} << f.n()) - f.n() - 1) + " subsets, got " +
                    std::to_string(f.values().size()));
  }
}

Verdict relabel(Verdict v, const std::string& check) {
  v.check = check;
  return v;
}

Rational pair_sum(const PairDistances& d, const SubsetKey& s) {
  Rational sum = 0;
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) sum += d(m[i], m[j]);
  }
  return sum;
}

Verdict steiner_identity(const MultiweightFamily& f, const PairDistances& d, const std::string& check) {
  const auto table = firstprop_table(d);
  for (const auto& [s, value] : f.values()) {
    if (s.size() < 3) continue;
    const Rational& expected = table[s.mask()];
    if (value != expected) {
      Witness w;
      w.labels = s.members();
      w.expected = expected;
      w.found = value;
      return Verdict::reject(check, "pair-steiner-minimum", std::move(w));
    }
  }
  return Verdict::accept(check);
}

LabelSet labels_of(std::uint64_t mask) {
  LabelSet out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i + 1);
  }
  return out;
}

std::vector<Rational> dense_values(const MultiweightFamily& f) {
  std::vector<Rational> out(std::size_t{1} << f.n(), Rational(0));
  for (const auto& [s, v] : f.values()) out[s.mask()] = v;
  return out;
}

// Diversity values scaled to a common denominator; empty when the scaled
// integers would not fit comfortably in 64 bits.
std::vector<std::int64_t> scaled_values(const std::vector<Rational>& values) {
  using boost::multiprecision::cpp_int;
  cpp_int lcm = 1;
  for (const auto& v : values) {
    cpp_int den = boost::multiprecision::denominator(v);
    lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
  }
  const cpp_int limit = cpp_int(1) << 60;
  std::vector<std::int64_t> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    cpp_int scaled = boost::multiprecision::numerator(v) * (lcm / boost::multiprecision::denominator(v));
    if (scaled >= limit || scaled <= -limit) return {};
    out.push_back(static_cast<std::int64_t>(scaled));
  }
  return out;
}

Verdict diversity_reject(const std::vector<Rational>& delta, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  Witness w;
  w.sets = {labels_of(a), labels_of(b), labels_of(c)};
  w.found = delta[a | c];
  w.expected = delta[a | b] + delta[b | c];
  return Verdict::reject("diversity", "diversity-triangle", std::move(w));
}

}  // namespace

Verdict check_graphlike(const MultiweightFamily& f) {
  require_complete(f);
  const auto d = pairs_of(f);
  if (auto v = triangle_check(d); !v.accepted) return relabel(std::move(v), "graphlike");
  return steiner_identity(f, d, "graphlike");
}

Verdict check_treelike(const MultiweightFamily& f) {
  require_complete(f);
  const auto d = pairs_of(f);
  if (auto v = four_point_check(d); !v.accepted) return relabel(std::move(v), "treelike");
  if (f.n() >= 3) {
    if (auto m = median_check(d); !m.verdict.accepted) return relabel(std::move(m.verdict), "treelike");
  }
  return steiner_identity(f, d, "treelike");
}

Rational quartet_formula(const PairDistances& d, std::span<const QuartetClass> classes, const SubsetKey& s) {
  const auto k = static_cast<std::int64_t>(s.size());
  Rational correction = 0;
  for (const auto& share : q_for_subset(classes, s)) {
    correction += classes[share.class_index].bridge_length * Rational(share.q + 1 - k);
  }
  return (pair_sum(d, s) - correction) / Rational(k - 1);
}

Verdict check_leaf_treelike(const MultiweightFamily& f) {
  require_complete(f);
  const auto d = pairs_of(f);
  if (auto v = four_point_check(d); !v.accepted) return relabel(std::move(v), "leaf-treelike");
  if (auto v = triangle_check(d); !v.accepted) return relabel(std::move(v), "leaf-treelike");

  std::vector<QuartetClass> classes;
  try {
    classes = q_classes(d);
  } catch (const InconsistentClassError& e) {
    Witness w;
    w.quartets = {{e.first().begin(), e.first().end()}, {e.second().begin(), e.second().end()}};
    w.sums = {e.first_length(), e.second_length()};
    w.message = e.what();
    return Verdict::reject("leaf-treelike", "quartet-class-consistency", std::move(w));
  }

  for (const auto& [s, value] : f.values()) {
    if (s.size() < 3) continue;
    Rational expected = s.size() == 3 ? pair_sum(d, s) / 2 : quartet_formula(d, classes, s);
    if (value != expected) {
      Witness w;
      w.labels = s.members();
      w.expected = std::move(expected);
      w.found = value;
      return Verdict::reject("leaf-treelike", s.size() == 3 ? "three-weight-half-sum" : "quartet-formula",
                             std::move(w));
    }
  }
  return Verdict::accept("leaf-treelike");
}

bool diversity_triangle_holds(const MultiweightFamily& f, const LabelSet& a, const LabelSet& b, const LabelSet& c) {
  auto delta = [&](LabelSet s) -> Rational {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() < 2) return 0;
    return f.at(SubsetKey(std::move(s)));
  };
  auto join = [](LabelSet x, const LabelSet& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };
  return delta(join(a, c)) <= delta(join(a, b)) + delta(join(b, c));
}

Verdict check_diversity(const MultiweightFamily& f) {
  require_complete(f);
  const int n = f.n();
  if (n > 24) throw Error(ErrorKind::too_large, "diversity check limited to n <= 24");
  for (const auto& [s, v] : f.values()) {
    if (v <= 0) {
      Witness w;
      w.labels = s.members();
      w.found = v;
      return Verdict::reject("diversity", "diversity-positivity", std::move(w));
    }
  }
  const auto delta = dense_values(f);
  const std::uint64_t masks = std::uint64_t{1} << n;

  if (n > kDiversityExhaustiveLimit) {
    std::mt19937_64 rng(0x6d776b6974ULL);
    std::uniform_int_distribution<std::uint64_t> pick(0, masks - 1);
    std::uniform_int_distribution<std::uint64_t> pick_nonempty(1, masks - 1);
    for (int i = 0; i < kDiversitySamples; ++i) {
      const std::uint64_t a = pick(rng);
      const std::uint64_t b = pick_nonempty(rng);
      const std::uint64_t c = pick(rng);
      if (delta[a | c] > delta[a | b] + delta[b | c]) return diversity_reject(delta, a, b, c);
    }
    return Verdict::accept("diversity", "sampled " + std::to_string(kDiversitySamples) +
                                            " (A,B,C) triples with a fixed seed (n > " +
                                            std::to_string(kDiversityExhaustiveLimit) + ")");
  }

  const auto scaled = scaled_values(delta);
  for (std::uint64_t a = 0; a < masks; ++a) {
    for (std::uint64_t b = 1; b < masks; ++b) {
      for (std::uint64_t c = 0; c < masks; ++c) {
        const bool violated = scaled.empty() ? delta[a | c] > delta[a | b] + delta[b | c]
                                             : scaled[a | c] > scaled[a | b] + scaled[b | c];
        if (violated) return diversity_reject(delta, a, b, c);
      }
    }
  }
  return Verdict::accept("diversity", "exhaustive");
}

bool confirm_witness(const MultiweightFamily& f, const Verdict& v) {
  if (v.accepted || !v.witness) return false;
  const Witness& w = *v.witness;
  const auto& c = v.criterion;
  if (c == "diversity-triangle") {
    return w.sets.size() == 3 && !diversity_triangle_holds(f, w.sets[0], w.sets[1], w.sets[2]);
  }
  if (c == "diversity-positivity") return f.at(SubsetKey(w.labels)) <= 0;

  const auto d = pairs_of(f);
  if (c == "triangle-inequality") {
    return w.labels.size() == 3 && d(w.labels[0], w.labels[1]) > d(w.labels[0], w.labels[2]) + d(w.labels[1], w.labels[2]);
  }
  if (c == "four-point") {
    if (w.labels.size() != 4) return false;
    try {
      quartet_split(d, {w.labels[0], w.labels[1], w.labels[2], w.labels[3]});
    } catch (const NotTreelikeQuartet&) {
      return true;
    }
    return false;
  }
  if (c == "median") {
    if (w.labels.size() != 3) return false;
    const Label a = w.labels[0], b = w.labels[1], e = w.labels[2];
    int count = 0;
    for (Label m = 1; m <= d.n(); ++m) {
      count += d(a, b) == d(a, m) + d(b, m) && d(a, e) == d(a, m) + d(e, m) && d(b, e) == d(b, m) + d(e, m);
    }
    return count != 1;
  }
  if (c == "pair-steiner-minimum") {
    SubsetKey s(w.labels);
    return f.at(s) != firstprop_min(d, s);
  }
  if (c == "three-weight-half-sum") {
    SubsetKey s(w.labels);
    return f.at(s) != pair_sum(d, s) / 2;
  }
  if (c == "quartet-formula") {
    SubsetKey s(w.labels);
    return f.at(s) != quartet_formula(d, q_classes(d), s);
  }
  if (c == "quartet-class-consistency") {
    try {
      q_classes(d);
    } catch (const InconsistentClassError&) {
      return true;
    }
    return false;
  }
  return false;
}

}  // namespace mwkit
