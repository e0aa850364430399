#include "mwkit/rational.hpp"

#include <cctype>

#include "mwkit/error.hpp"

namespace mwkit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// cpp_int's string constructor treats a leading 0 as octal, so digits are
// accumulated by hand.
boost::multiprecision::cpp_int decimal(std::string_view digits) {
  boost::multiprecision::cpp_int out = 0;
  for (char c : digits) out = out * 10 + (c - '0');
  return out;
}

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorKind::syntax_error, "not a decimal or fraction: \"" + std::string(text) + "\"");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  using boost::multiprecision::cpp_int;
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    cpp_int d = decimal(den);
    if (d == 0) throw Error(ErrorKind::syntax_error, "zero denominator in \"" + std::string(text) + "\"");
    value = Rational(decimal(num), d);
  } else {
    auto dot = s.find('.');
    auto whole = s.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_number(text);
    if (!whole.empty() && !all_digits(whole)) bad_number(text);
    if (dot != std::string_view::npos && !all_digits(frac)) bad_number(text);
    cpp_int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    cpp_int digits = decimal(std::string(whole) + std::string(frac));
    value = Rational(digits, scale);
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  auto num = boost::multiprecision::numerator(value);
  auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::duplicate_key: return "DuplicateKey";
    case ErrorKind::missing_pair: return "MissingPair";
    case ErrorKind::nonpositive_value: return "NonpositiveValue";
    case ErrorKind::incomplete_family: return "IncompleteFamily";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::unknown_vertex: return "UnknownVertex";
    case ErrorKind::disconnected: return "Disconnected";
    case ErrorKind::self_loop: return "SelfLoop";
    case ErrorKind::parallel_edge: return "ParallelEdge";
    case ErrorKind::nonpositive_weight: return "NonpositiveWeight";
    case ErrorKind::not_a_tree: return "NotATree";
    case ErrorKind::not_a_leaf: return "NotALeaf";
    case ErrorKind::inconsistent_class: return "InconsistentClass";
    case ErrorKind::not_treelike: return "NotTreelike";
    case ErrorKind::not_four_point: return "NotFourPoint";
    case ErrorKind::not_graphlike: return "NotGraphlike";
    case ErrorKind::bad_parameters: return "BadParameters";
    case ErrorKind::internal_error: return "InternalError";
  }
  return "Error";
}

}  // namespace mwkit
