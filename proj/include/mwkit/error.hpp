#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mwkit {

enum class ErrorKind {
  syntax_error,
  duplicate_key,
  missing_pair,
  nonpositive_value,
  incomplete_family,
  too_large,
  unknown_vertex,
  disconnected,
  self_loop,
  parallel_edge,
  nonpositive_weight,
  not_a_tree,
  not_a_leaf,
  inconsistent_class,
  not_treelike,
  not_four_point,
  not_graphlike,
  bad_parameters,
  internal_error,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mwkit
