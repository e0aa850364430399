#include "mwkit/family.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "mwkit/error.hpp"

namespace mwkit {

SubsetKey::SubsetKey(std::initializer_list<Label> labels) : SubsetKey(LabelSet(labels)) {}

SubsetKey::SubsetKey(LabelSet labels) : members_(std::move(labels)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw Error(ErrorKind::syntax_error, "repeated label in subset " + to_string());
  }
  if (members_.size() < 2) throw Error(ErrorKind::syntax_error, "subset needs at least two labels");
  if (members_.front() < 1) throw Error(ErrorKind::syntax_error, "labels start at 1");
}

SubsetKey SubsetKey::from_mask(std::uint64_t mask) {
  LabelSet labels;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) labels.push_back(i + 1);
  }
  return SubsetKey(std::move(labels));
}

bool SubsetKey::contains(Label label) const {
  return std::binary_search(members_.begin(), members_.end(), label);
}

std::uint64_t SubsetKey::mask() const {
  std::uint64_t m = 0;
  for (Label l : members_) {
    if (l > 64) throw Error(ErrorKind::too_large, "label " + std::to_string(l) + " exceeds mask width");
    m |= std::uint64_t{1} << (l - 1);
  }
  return m;
}

std::string SubsetKey::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(members_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const SubsetKey& a, const SubsetKey& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                b.members_.begin(), b.members_.end());
}

SubsetKey parse_subset_key(const std::string& text) {
  LabelSet labels;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    auto first = part.find_first_not_of(" \t");
    auto last = part.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error(ErrorKind::syntax_error, "empty label in \"" + text + "\"");
    part = part.substr(first, last - first + 1);
    if (part.empty() || part.size() > 9 || !std::all_of(part.begin(), part.end(), ::isdigit)) {
      throw Error(ErrorKind::syntax_error, "bad label \"" + part + "\" in \"" + text + "\"");
    }
    labels.push_back(std::stoi(part));
  }
  if (!std::is_sorted(labels.begin(), labels.end())) {
    throw Error(ErrorKind::syntax_error, "labels must be ascending in \"" + text + "\"");
  }
  return SubsetKey(std::move(labels));
}

std::vector<SubsetKey> subsets_of(int n, int min_size) {
  if (n < 0 || n > 30) throw Error(ErrorKind::too_large, "cannot enumerate subsets of [" + std::to_string(n) + "]");
  std::vector<SubsetKey> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = 1; m < limit; ++m) {
    if (std::popcount(m) >= std::max(min_size, 2)) out.push_back(SubsetKey::from_mask(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

MultiweightFamily::MultiweightFamily(int n, std::map<SubsetKey, Rational> values)
    : n_(n), values_(std::move(values)) {
  if (n_ < 2) throw Error(ErrorKind::bad_parameters, "a family needs n >= 2");
  for (const auto& [key, value] : values_) {
    if (key.members().back() > n_) {
      throw Error(ErrorKind::unknown_vertex, "subset " + key.to_string() + " is not inside [" + std::to_string(n_) + "]");
    }
    if (value <= 0) {
      throw Error(ErrorKind::nonpositive_value, "D_{" + key.to_string() + "} = " + mwkit::to_string(value));
    }
  }
  const auto n64 = static_cast<unsigned>(n_);
  const std::size_t pair_count = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
  std::size_t pairs = 0;
  for (const auto& [key, value] : values_) pairs += key.size() == 2;
  if (n64 < 63 && values_.size() == (std::size_t{1} << n64) - n64 - 1) {
    completeness_ = Completeness::full;
  } else if (pairs == pair_count && values_.size() == pair_count) {
    completeness_ = Completeness::pairs;
  } else {
    completeness_ = Completeness::partial;
  }
}

std::optional<Rational> MultiweightFamily::find(const SubsetKey& s) const {
  auto it = values_.find(s);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

const Rational& MultiweightFamily::at(const SubsetKey& s) const {
  auto it = values_.find(s);
  if (it == values_.end()) {
    throw Error(s.size() == 2 ? ErrorKind::missing_pair : ErrorKind::incomplete_family,
                "no value for D_{" + s.to_string() + "}");
  }
  return it->second;
}

MultiweightFamily MultiweightFamily::with_value(const SubsetKey& s, const Rational& value) const {
  auto copy = values_;
  copy[s] = value;
  return MultiweightFamily(n_, std::move(copy));
}

PairDistances::PairDistances(int n) : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

void PairDistances::set(Label i, Label j, const Rational& value) {
  d_[index(i, j)] = value;
  d_[index(j, i)] = value;
}

PairDistances pairs_of(const MultiweightFamily& f) {
  PairDistances d(f.n());
  for (Label i = 1; i <= f.n(); ++i) {
    for (Label j = i + 1; j <= f.n(); ++j) {
      auto v = f.find(SubsetKey{i, j});
      if (!v) throw Error(ErrorKind::missing_pair, "no value for D_{" + std::to_string(i) + "," + std::to_string(j) + "}");
      d.set(i, j, *v);
    }
  }
  return d;
}

MultiweightFamily family_from_pairs(const PairDistances& d) {
  std::map<SubsetKey, Rational> values;
  for (Label i = 1; i <= d.n(); ++i) {
    for (Label j = i + 1; j <= d.n(); ++j) values.emplace(SubsetKey{i, j}, d(i, j));
  }
  return MultiweightFamily(d.n(), std::move(values));
}

}  // namespace mwkit
