#pragma once

#include <string>
#include <string_view>

#include "mwkit/family.hpp"
#include "mwkit/graph.hpp"

namespace mwkit {

/// Largest n accepted by the parsers unless raised explicitly.
inline constexpr int kDefaultCap = 16;

/// {"n": int, "weights": {"i,j,...": "decimal-or-fraction"}}. Keys are
/// ascending comma-separated labels. Throws SyntaxError, DuplicateKey,
/// NonpositiveValue, TooLarge.
MultiweightFamily parse_family(std::string_view text, int cap = kDefaultCap);
std::string serialize_family(const MultiweightFamily& f);

/// {"n": int, "extra": [ids], "edges": [["u", "v", "weight"]]} with an
/// optional "regime": "positive" | "nonnegative" (default positive).
WeightedGraph parse_graph(std::string_view text, int cap = kDefaultCap);
std::string serialize_graph(const WeightedGraph& g);

/// Graphviz description; edges carry their weight as label, unlabelled
/// vertices are dashed.
std::string to_dot(const WeightedGraph& g, std::string_view title = "G");

std::string read_file(const std::string& path);

}  // namespace mwkit
