#include "mwkit/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mwkit/error.hpp"

namespace mwkit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(std::string_view text, const json::parser_callback_t& cb = nullptr) {
  try {
    return json::parse(text.begin(), text.end(), cb);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::syntax_error, e.what());
  }
}

Rational value_of(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw Error(ErrorKind::syntax_error, where + ": weights must be strings like \"3.5\" or \"7/2\"");
}

int read_n(const json& doc, int cap) {
  if (!doc.is_object()) throw Error(ErrorKind::syntax_error, "top level must be an object");
  auto it = doc.find("n");
  if (it == doc.end() || !it->is_number_integer()) throw Error(ErrorKind::syntax_error, "missing integer \"n\"");
  const auto n = it->get<std::int64_t>();
  if (n < 1) throw Error(ErrorKind::syntax_error, "\"n\" must be positive");
  if (n > cap) {
    throw Error(ErrorKind::too_large, "n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap) +
                                          " (raise with --cap or MWKIT_CAP)");
  }
  return static_cast<int>(n);
}

std::string vertex_name(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_unsigned()) return std::to_string(v.get<std::uint64_t>());
  throw Error(ErrorKind::syntax_error, "vertex ids must be strings");
}

}  // namespace

MultiweightFamily parse_family(std::string_view text, int cap) {
  std::string outer_key;
  std::set<std::string> seen;
  std::string duplicate;
  auto cb = [&](int depth, json::parse_event_t event, json& parsed) {
    if (event == json::parse_event_t::key) {
      const auto key = parsed.get<std::string>();
      if (depth == 1) outer_key = key;
      if (depth == 2 && outer_key == "weights" && !seen.insert(key).second && duplicate.empty()) duplicate = key;
    }
    return true;
  };
  const json doc = parse_json(text, cb);
  if (!duplicate.empty()) throw Error(ErrorKind::duplicate_key, "key \"" + duplicate + "\" appears twice");
  const int n = read_n(doc, cap);
  if (n < 2) throw Error(ErrorKind::syntax_error, "a family needs n >= 2");
  auto weights = doc.find("weights");
  if (weights == doc.end() || !weights->is_object()) throw Error(ErrorKind::syntax_error, "missing object \"weights\"");

  std::map<SubsetKey, Rational> values;
  for (const auto& [key, v] : weights->items()) {
    SubsetKey s = parse_subset_key(key);
    if (s.members().back() > n) {
      throw Error(ErrorKind::syntax_error, "key \"" + key + "\" has a label above n = " + std::to_string(n));
    }
    if (!values.emplace(s, value_of(v, "\"" + key + "\"")).second) {
      throw Error(ErrorKind::duplicate_key, "key \"" + key + "\" names a subset already given");
    }
  }
  return MultiweightFamily(n, std::move(values));
}

std::string serialize_family(const MultiweightFamily& f) {
  ordered_json doc;
  doc["n"] = f.n();
  ordered_json weights = ordered_json::object();
  for (const auto& [s, v] : f.values()) weights[s.to_string()] = to_string(v);
  doc["weights"] = std::move(weights);
  return doc.dump(2) + "\n";
}

WeightedGraph parse_graph(std::string_view text, int cap) {
  const json doc = parse_json(text);
  RawGraph raw;
  raw.n = read_n(doc, cap);
  if (auto extra = doc.find("extra"); extra != doc.end()) {
    if (!extra->is_array()) throw Error(ErrorKind::syntax_error, "\"extra\" must be an array");
    for (const auto& x : *extra) raw.extra.push_back(vertex_name(x));
  }
  if (auto regime = doc.find("regime"); regime != doc.end()) {
    const auto r = regime->is_string() ? regime->get<std::string>() : std::string{};
    if (r == "positive") {
      raw.regime = WeightRegime::positive;
    } else if (r == "nonnegative") {
      raw.regime = WeightRegime::nonnegative;
    } else {
      throw Error(ErrorKind::syntax_error, "\"regime\" must be \"positive\" or \"nonnegative\"");
    }
  }
  auto edges = doc.find("edges");
  if (edges == doc.end() || !edges->is_array()) throw Error(ErrorKind::syntax_error, "missing array \"edges\"");
  for (const auto& e : *edges) {
    if (!e.is_array() || e.size() != 3) throw Error(ErrorKind::syntax_error, "each edge is [u, v, weight]");
    raw.edges.push_back({vertex_name(e[0]), vertex_name(e[1]), value_of(e[2], "edge weight")});
  }
  return validate_graph(raw);
}

std::string serialize_graph(const WeightedGraph& g) {
  const RawGraph raw = to_raw(g);
  ordered_json doc;
  doc["n"] = raw.n;
  doc["extra"] = raw.extra;
  if (raw.regime == WeightRegime::nonnegative) doc["regime"] = "nonnegative";
  ordered_json edges = ordered_json::array();
  for (const auto& e : raw.edges) edges.push_back({e.u, e.v, to_string(e.weight)});
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string to_dot(const WeightedGraph& g, std::string_view title) {
  std::ostringstream out;
  out << "graph \"" << title << "\" {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  \"" << g.name(v) << "\"";
    if (!g.is_labelled(v)) out << " [style=dashed]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  \"" << g.name(e.u) << "\" -- \"" << g.name(e.v) << "\" [label=\"" << to_string(e.weight) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::syntax_error, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace mwkit
