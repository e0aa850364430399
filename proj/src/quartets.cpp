#include "mwkit/quartets.hpp"

#include <algorithm>

namespace mwkit {

namespace {

std::string quartet_text(const Quartet& q) {
  return "(" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "," + std::to_string(q[2]) + "," +
         std::to_string(q[3]) + ")";
}

std::array<Rational, 3> pair_sums(const PairDistances& d, const Quartet& q) {
  const auto [a, b, c, e] = q;
  return {d(a, b) + d(c, e), d(a, c) + d(b, e), d(a, e) + d(b, c)};
}

void check_quartet(const PairDistances& d, const Quartet& q) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (q[i] < 1 || q[i] > d.n()) throw Error(ErrorKind::unknown_vertex, "label " + std::to_string(q[i]) + " outside [n]");
    for (std::size_t j = 0; j < i; ++j) {
      if (q[i] == q[j]) throw Error(ErrorKind::bad_parameters, "quartet " + quartet_text(q) + " repeats a label");
    }
  }
}

}  // namespace

Verdict triangle_check(const PairDistances& d) {
  const int n = d.n();
  for (Label i = 1; i <= n; ++i) {
    for (Label j = i + 1; j <= n; ++j) {
      for (Label k = j + 1; k <= n; ++k) {
        const std::array<Triple, 3> forms{Triple{i, j, k}, Triple{i, k, j}, Triple{j, k, i}};
        for (const auto& [x, y, pivot] : forms) {
          Rational bound = d(x, pivot) + d(y, pivot);
          if (d(x, y) > bound) {
            Witness w;
            w.labels = {x, y, pivot};
            w.found = d(x, y);
            w.expected = bound;
            return Verdict::reject("triangle", "triangle-inequality", std::move(w));
          }
        }
      }
    }
  }
  return Verdict::accept("triangle");
}

Verdict four_point_check(const PairDistances& d) {
  const int n = d.n();
  for (Label a = 1; a <= n; ++a) {
    for (Label b = a + 1; b <= n; ++b) {
      for (Label c = b + 1; c <= n; ++c) {
        for (Label e = c + 1; e <= n; ++e) {
          auto sums = pair_sums(d, {a, b, c, e});
          const Rational& top = *std::max_element(sums.begin(), sums.end());
          if (std::count(sums.begin(), sums.end(), top) < 2) {
            Witness w;
            w.labels = {a, b, c, e};
            w.sums.assign(sums.begin(), sums.end());
            return Verdict::reject("four-point", "four-point", std::move(w));
          }
        }
      }
    }
  }
  return Verdict::accept("four-point");
}

MedianCheck median_check(const PairDistances& d) {
  MedianCheck out;
  const int n = d.n();
  for (Label a = 1; a <= n; ++a) {
    for (Label b = a + 1; b <= n; ++b) {
      for (Label c = b + 1; c <= n; ++c) {
        std::vector<Label> found;
        for (Label m = 1; m <= n; ++m) {
          if (d(a, b) == d(a, m) + d(b, m) && d(a, c) == d(a, m) + d(c, m) && d(b, c) == d(b, m) + d(c, m)) {
            found.push_back(m);
          }
        }
        if (found.size() != 1) {
          Witness w;
          w.labels = {a, b, c};
          w.candidates = std::move(found);
          w.message = w.candidates.empty() ? "no median" : "median not unique";
          out.verdict = Verdict::reject("median", "median", std::move(w));
          return out;
        }
        out.medians.emplace(Triple{a, b, c}, found.front());
      }
    }
  }
  out.verdict = Verdict::accept("median");
  return out;
}

NotTreelikeQuartet::NotTreelikeQuartet(Quartet q, std::array<Rational, 3> sums)
    : Error(ErrorKind::not_treelike, "quartet " + quartet_text(q) + " has pair sums " + to_string(sums[0]) + ", " +
                                         to_string(sums[1]) + ", " + to_string(sums[2]) +
                                         " with the maximum attained once"),
      quartet_(q),
      sums_(std::move(sums)) {}

QuartetSplit quartet_split(const PairDistances& d, const Quartet& q) {
  check_quartet(d, q);
  QuartetSplit out;
  out.labels = q;
  out.sums = pair_sums(d, q);
  const auto& s = out.sums;
  if (s[0] == s[1] && s[1] == s[2]) {
    out.shape = QuartetShape::degenerate;
    return out;
  }
  // Pairings matching sums[k]: {q0 q_{k+1}} | the other two.
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& o1 = s[(k + 1) % 3];
    const auto& o2 = s[(k + 2) % 3];
    if (s[k] < o1 && o1 == o2) {
      std::array<Label, 2> left{q[0], q[k + 1]};
      std::array<Label, 2> right{};
      std::size_t r = 0;
      for (std::size_t i = 1; i < 4; ++i) {
        if (i != k + 1) right[r++] = q[i];
      }
      std::sort(left.begin(), left.end());
      std::sort(right.begin(), right.end());
      if (right[0] < left[0]) std::swap(left, right);
      out.shape = QuartetShape::split;
      out.left = left;
      out.right = right;
      return out;
    }
  }
  throw NotTreelikeQuartet(q, out.sums);
}

LabelSet l_set(const PairDistances& d, const Quartet& q) {
  check_quartet(d, q);
  const auto [a, b, c, e] = q;
  // x - anchor is constant on the three other quartet members.
  auto offsets_agree = [&](Label x, Label anchor, const std::array<Label, 3>& zs) {
    Rational first = d(x, zs[0]) - d(anchor, zs[0]);
    return d(x, zs[1]) - d(anchor, zs[1]) == first && d(x, zs[2]) - d(anchor, zs[2]) == first;
  };
  LabelSet out;
  for (Label x = 1; x <= d.n(); ++x) {
    if (x == a || x == b) {
      out.push_back(x);
      continue;
    }
    if (x == c || x == e) continue;
    if (offsets_agree(x, a, {b, c, e}) || offsets_agree(x, b, {a, c, e})) out.push_back(x);
  }
  return out;
}

InconsistentClassError::InconsistentClassError(Quartet a, Rational length_a, Quartet b, Rational length_b)
    : Error(ErrorKind::inconsistent_class, "representatives " + quartet_text(a) + " and " + quartet_text(b) +
                                               " of one class have bridge lengths " + to_string(length_a) +
                                               " and " + to_string(length_b)),
      first_(a),
      second_(b),
      first_length_(std::move(length_a)),
      second_length_(std::move(length_b)) {}

std::vector<QuartetClass> q_classes(const PairDistances& d) {
  const int n = d.n();
  std::map<std::pair<LabelSet, LabelSet>, QuartetClass> classes;
  if (n < 4) return {};
  for (Label a = 1; a <= n; ++a) {
    for (Label b = 1; b <= n; ++b) {
      if (b == a) continue;
      for (Label c = 1; c <= n; ++c) {
        if (c == a || c == b) continue;
        for (Label e = 1; e <= n; ++e) {
          if (e == a || e == b || e == c) continue;
          const Rational low = d(a, b) + d(c, e);
          const Rational mid = d(a, c) + d(b, e);
          if (!(low < mid && mid == d(a, e) + d(b, c))) continue;
          LabelSet left = l_set(d, {a, b, c, e});
          LabelSet right = l_set(d, {c, e, a, b});
          LabelSet all;
          std::set_union(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(all));
          if (static_cast<int>(all.size()) != n) continue;
          if (right < left) std::swap(left, right);
          Rational length = (mid - low) / 2;
          const Quartet rep{a, b, c, e};
          auto [it, fresh] = classes.try_emplace({left, right});
          QuartetClass& cls = it->second;
          if (fresh) {
            cls.first = std::move(left);
            cls.second = std::move(right);
            cls.bridge_length = length;
          } else if (cls.bridge_length != length) {
            throw InconsistentClassError(cls.representatives.front(), cls.bridge_length, rep, length);
          }
          cls.representatives.push_back(rep);
        }
      }
    }
  }
  std::vector<QuartetClass> out;
  out.reserve(classes.size());
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  return out;
}

std::vector<ClassShare> q_for_subset(std::span<const QuartetClass> classes, const SubsetKey& s) {
  auto meet = [&](const LabelSet& l) {
    return static_cast<std::int64_t>(std::count_if(l.begin(), l.end(), [&](Label x) { return s.contains(x); }));
  };
  std::vector<ClassShare> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto p = meet(classes[i].first);
    const auto r = meet(classes[i].second);
    if (p > 0 && r > 0) out.push_back({i, p * r});
  }
  return out;
}

}  // namespace mwkit
