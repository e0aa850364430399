#include "mwkit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mwkit/checkers.hpp"
#include "mwkit/error.hpp"
#include "mwkit/generate.hpp"
#include "mwkit/io.hpp"
#include "mwkit/multiweight.hpp"
#include "mwkit/quartets.hpp"
#include "mwkit/realize.hpp"

namespace mwkit {

namespace {

using nlohmann::ordered_json;

int cap_from_environment() {
  if (const char* env = std::getenv("MWKIT_CAP"); env != nullptr && *env != '\0') {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::bad_parameters, "MWKIT_CAP is not an integer");
    }
  }
  return kDefaultCap;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::bad_parameters, "cannot write " + path);
  file << text;
}

std::vector<Label> parse_labels(const std::string& text) {
  std::vector<Label> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorKind::syntax_error, "bad label list \"" + text + "\"");
    }
  }
  return out;
}

std::string shape_name(QuartetShape s) { return s == QuartetShape::split ? "split" : "degenerate"; }

ordered_json sums_json(const std::array<Rational, 3>& sums) {
  ordered_json arr = ordered_json::array();
  for (const auto& s : sums) arr.push_back(to_string(s));
  return arr;
}

struct Settings {
  int cap = kDefaultCap;
  std::string output;
  std::string kind;
  std::string file;
  std::string subset;
  std::string quad;
  std::string format = "dot";
  int n = 0;
  std::uint64_t seed = 1;
  std::string weight_range = "1,64";
};

int do_check(const Settings& s, std::ostream& out) {
  const auto f = parse_family(read_file(s.file), s.cap);
  Verdict v;
  if (s.kind == "graph") {
    v = check_graphlike(f);
  } else if (s.kind == "tree") {
    v = check_treelike(f);
  } else if (s.kind == "leaf-tree") {
    v = check_leaf_treelike(f);
  } else {
    v = check_diversity(f);
  }
  out << to_json(v).dump(2) << "\n";
  return v.accepted ? kExitAccept : kExitReject;
}

int do_realize(const Settings& s, std::ostream& out) {
  const auto f = parse_family(read_file(s.file), s.cap);
  try {
    WeightedGraph g = [&] {
      if (s.kind == "graph") return realize_graph(f);
      if (s.kind == "tree") return realize_tree(f).graph();
      auto v = check_leaf_treelike(f);
      if (!v.accepted) throw RejectedFamily(ErrorKind::not_treelike, std::move(v));
      return realize_leaf_tree(pairs_of(f)).graph();
    }();
    emit(s.format == "json" ? serialize_graph(g) : to_dot(g, s.kind), s.output, out);
    return kExitAccept;
  } catch (const RejectedFamily& e) {
    out << to_json(e.verdict()).dump(2) << "\n";
    return kExitReject;
  }
}

int do_multiweights(const Settings& s, std::ostream& out) {
  const auto g = parse_graph(read_file(s.file), s.cap);
  emit(serialize_family(family_of(g)), s.output, out);
  return kExitAccept;
}

int do_steiner(const Settings& s, std::ostream& out) {
  const auto g = parse_graph(read_file(s.file), s.cap);
  const SubsetKey key(parse_labels(s.subset));
  const auto result = multiweight_graph(g, key);
  const std::string header = "// D_{" + key.to_string() + "} = " + to_string(result.value) + "\n";
  const std::string dot = to_dot(result.realizing_tree.graph(), "steiner " + key.to_string());
  if (s.output.empty()) {
    out << header << dot;
  } else {
    out << header;
    emit(dot, s.output, out);
  }
  return kExitAccept;
}

int do_quartets(const Settings& s, std::ostream& out) {
  const auto d = pairs_of(parse_family(read_file(s.file), s.cap));
  ordered_json rows = ordered_json::array();
  for (Label a = 1; a <= d.n(); ++a) {
    for (Label b = a + 1; b <= d.n(); ++b) {
      for (Label c = b + 1; c <= d.n(); ++c) {
        for (Label e = c + 1; e <= d.n(); ++e) {
          ordered_json row;
          row["quartet"] = {a, b, c, e};
          try {
            const auto split = quartet_split(d, {a, b, c, e});
            row["shape"] = shape_name(split.shape);
            if (split.shape == QuartetShape::split) {
              row["pairing"] = {{split.left[0], split.left[1]}, {split.right[0], split.right[1]}};
            }
            row["sums"] = sums_json(split.sums);
          } catch (const NotTreelikeQuartet& x) {
            row["shape"] = "not-treelike";
            row["sums"] = sums_json(x.sums());
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  out << rows.dump(2) << "\n";
  return kExitAccept;
}

int do_lsets(const Settings& s, std::ostream& out) {
  const auto d = pairs_of(parse_family(read_file(s.file), s.cap));
  const auto labels = parse_labels(s.quad);
  if (labels.size() != 4) throw Error(ErrorKind::bad_parameters, "--quad needs four labels");
  const Quartet q{labels[0], labels[1], labels[2], labels[3]};
  const auto left = l_set(d, q);
  const auto right = l_set(d, {q[2], q[3], q[0], q[1]});
  const auto [a, b, c, e] = q;
  LabelSet all;
  std::set_union(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(all));
  ordered_json doc;
  doc["quad"] = labels;
  doc["first_pair"] = LabelSet{a, b};
  doc["first"] = left;
  doc["second_pair"] = LabelSet{c, e};
  doc["second"] = right;
  doc["split_pattern"] = d(a, b) + d(c, e) < d(a, c) + d(b, e) && d(a, c) + d(b, e) == d(a, e) + d(b, c);
  doc["covers"] = static_cast<int>(all.size()) == d.n();
  out << doc.dump(2) << "\n";
  return kExitAccept;
}

int do_qclasses(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto d = pairs_of(parse_family(read_file(s.file), s.cap));
  try {
    ordered_json rows = ordered_json::array();
    for (const auto& cls : q_classes(d)) {
      ordered_json row;
      row["first"] = cls.first;
      row["second"] = cls.second;
      row["bridge_length"] = to_string(cls.bridge_length);
      row["representatives"] = cls.representatives;
      rows.push_back(std::move(row));
    }
    out << rows.dump(2) << "\n";
    return kExitAccept;
  } catch (const InconsistentClassError& e) {
    err << e.what() << "\n";
    return kExitReject;
  }
}

int do_gen(const Settings& s, std::ostream& out) {
  GenOptions o;
  o.kind = s.kind == "graph" ? InstanceKind::graph : s.kind == "tree" ? InstanceKind::tree : InstanceKind::leaf_tree;
  o.n = s.n;
  o.seed = s.seed;
  o.cap = s.cap;
  const auto range = parse_labels(s.weight_range);
  if (range.size() != 2) throw Error(ErrorKind::bad_parameters, "--weight-range is min,max (numerators over 16)");
  o.min_k = range[0];
  o.max_k = range[1];
  emit(serialize_graph(generate(o)), s.output, out);
  return kExitAccept;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Multiweight families of weighted graphs and trees", "mwkit"};
  app.require_subcommand(1);
  auto* cap = app.add_option("--cap", s.cap, "Largest accepted n (default 16, or MWKIT_CAP)");

  const std::vector<std::string> realize_kinds{"graph", "tree", "leaf-tree"};

  auto* check = app.add_subcommand("check", "Decide realizability; verdict JSON on stdout");
  check->add_option("kind", s.kind)->required()->check(CLI::IsMember({"graph", "tree", "leaf-tree", "diversity"}));
  check->add_option("family", s.file)->required();

  auto* realize = app.add_subcommand("realize", "Construct a realizing graph or tree");
  realize->add_option("kind", s.kind)->required()->check(CLI::IsMember(realize_kinds));
  realize->add_option("family", s.file)->required();
  realize->add_option("-o,--output", s.output);
  realize->add_option("--format", s.format)->check(CLI::IsMember({"dot", "json"}));

  auto* multiweights = app.add_subcommand("multiweights", "Full multiweight family of a graph file");
  multiweights->add_option("graph", s.file)->required();
  multiweights->add_option("-o,--output", s.output);

  auto* steiner = app.add_subcommand("steiner", "One multiweight with a realizing subtree");
  steiner->add_option("graph", s.file)->required();
  steiner->add_option("--subset", s.subset)->required();
  steiner->add_option("-o,--output", s.output);

  auto* quartets = app.add_subcommand("quartets", "Split type of every 4-subset");
  quartets->add_option("family", s.file)->required();

  auto* lsets = app.add_subcommand("lsets", "L-sets of an ordered quartet");
  lsets->add_option("family", s.file)->required();
  lsets->add_option("--quad", s.quad)->required();

  auto* qclasses = app.add_subcommand("qclasses", "Quartet classes with L-sets and bridge lengths");
  qclasses->add_option("family", s.file)->required();

  auto* gen = app.add_subcommand("gen", "Random instance as a graph file");
  gen->add_option("kind", s.kind)->required()->check(CLI::IsMember(realize_kinds));
  gen->add_option("--n", s.n)->required();
  gen->add_option("--seed", s.seed);
  gen->add_option("--weight-range", s.weight_range, "k range for weights k/16");
  gen->add_option("-o,--output", s.output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitAccept;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitInputError;
  }

  try {
    if (cap->count() == 0) s.cap = cap_from_environment();
    if (s.cap < 2) throw Error(ErrorKind::bad_parameters, "cap must be at least 2");
    if (*check) return do_check(s, out);
    if (*realize) return do_realize(s, out);
    if (*multiweights) return do_multiweights(s, out);
    if (*steiner) return do_steiner(s, out);
    if (*quartets) return do_quartets(s, out);
    if (*lsets) return do_lsets(s, out);
    if (*qclasses) return do_qclasses(s, out, err);
    if (*gen) return do_gen(s, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << app.help();
  return kExitInputError;
}

}  // namespace mwkit
