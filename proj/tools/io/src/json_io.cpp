#include "qcalc_io/json_io.hpp"

#include <fstream>
#include <initializer_list>
#include <string_view>

namespace qcalc::io {

namespace {

using nlohmann::json;

/// A value together with its JSON pointer, for error reporting.
struct Node {
  const json& value;
  std::string pointer;

  Node at(std::string_view key) const {
    return {value.at(std::string(key)), pointer + "/" + escape(key)};
  }
  Node at(std::size_t index) const { return {value.at(index), pointer + "/" + std::to_string(index)}; }
  bool has(std::string_view key) const { return value.contains(std::string(key)); }

  [[noreturn]] void fail(const std::string& message) const { throw SchemaError(pointer, message); }

  static std::string escape(std::string_view key) {
    std::string out;
    for (char c : key) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out += c;
    }
    return out;
  }
};

const Node& expect_object(const Node& n, std::initializer_list<std::string_view> allowed) {
  if (!n.value.is_object()) n.fail("expected an object");
  for (const auto& item : n.value.items()) {
    bool known = false;
    for (std::string_view key : allowed) known = known || item.key() == key;
    if (!known) n.fail("unknown field '" + item.key() + "'");
  }
  return n;
}

Node required(const Node& n, std::string_view key) {
  if (!n.has(key)) n.fail("missing required field '" + std::string(key) + "'");
  return n.at(key);
}

const Node& expect_array(const Node& n) {
  if (!n.value.is_array()) n.fail("expected an array");
  return n;
}

std::string as_string(const Node& n) {
  if (!n.value.is_string()) n.fail("expected a string");
  std::string s = n.value.get<std::string>();
  if (s.empty()) n.fail("expected a non-empty string");
  return s;
}

double as_number(const Node& n) {
  if (!n.value.is_number()) n.fail("expected a number");
  return n.value.get<double>();
}

Pair as_complex(const Node& n) {
  if (!n.value.is_array() || n.value.size() != 2) n.fail("expected a complex number [re, im]");
  return {as_number(n.at(std::size_t{0})), as_number(n.at(std::size_t{1}))};
}

ElementKind as_kind(const Node& n) {
  const std::string s = as_string(n);
  if (s == "source") return ElementKind::Source;
  if (s == "splitter") return ElementKind::Splitter;
  if (s == "phase") return ElementKind::Phase;
  if (s == "combiner") return ElementKind::Combiner;
  if (s == "detector") return ElementKind::Detector;
  n.fail("unknown element kind '" + s + "'");
}

Element element_from_json(const Node& n) {
  expect_object(n, {"id", "kind", "params"});
  Element e;
  e.id = as_string(required(n, "id"));
  e.kind = as_kind(required(n, "kind"));
  if (!n.has("params")) {
    if (e.kind == ElementKind::Splitter) n.fail("splitter requires params.branches");
    if (e.kind == ElementKind::Phase) n.fail("phase element requires params.delta");
    return e;
  }
  const Node params = n.at("params");
  switch (e.kind) {
    case ElementKind::Source:
      expect_object(params, {"rate", "phase", "transmission"});
      if (params.has("rate")) e.rate = as_number(params.at("rate"));
      if (params.has("phase")) e.phase = as_number(params.at("phase"));
      break;
    case ElementKind::Splitter: {
      expect_object(params, {"branches", "transmission"});
      const Node branches = required(params, "branches");
      if (!branches.value.is_object()) branches.fail("expected an object mapping target id to [re, im]");
      for (const auto& item : branches.value.items()) {
        e.branches.push_back({item.key(), as_complex(branches.at(item.key()))});
      }
      break;
    }
    case ElementKind::Phase:
      expect_object(params, {"delta", "transmission"});
      e.phase = as_number(required(params, "delta"));
      break;
    case ElementKind::Combiner:
    case ElementKind::Detector:
      expect_object(params, {"transmission"});
      break;
  }
  if (params.has("transmission")) e.transmission = as_number(params.at("transmission"));
  return e;
}

}  // namespace

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

PartitionTree tree_from_json(const json& doc) {
  const Node root_node{doc, ""};
  expect_object(root_node, {"root", "nodes"});
  const std::string root = as_string(required(root_node, "root"));
  const Node nodes = expect_array(required(root_node, "nodes"));
  if (nodes.value.empty()) nodes.fail("expected at least one node");
  std::vector<TreeNodeSpec> specs;
  for (std::size_t i = 0; i < nodes.value.size(); ++i) {
    const Node n = nodes.at(i);
    expect_object(n, {"id", "children", "weight"});
    TreeNodeSpec spec{as_string(required(n, "id")), {}, 1.0};
    if (n.has("children")) {
      const Node children = expect_array(n.at("children"));
      if (children.value.empty()) children.fail("children must be non-empty; omit it for a leaf");
      for (std::size_t c = 0; c < children.value.size(); ++c) spec.children.push_back(as_string(children.at(c)));
      if (n.has("weight")) n.at("weight").fail("internal nodes take their value from their children");
    }
    if (n.has("weight")) spec.weight = as_number(n.at("weight"));
    specs.push_back(std::move(spec));
  }
  return PartitionTree(std::move(specs), root);
}

NetworkSpec network_from_json(const json& doc) {
  const Node top{doc, ""};
  expect_object(top, {"elements", "edges"});
  NetworkSpec spec;
  const Node elements = expect_array(required(top, "elements"));
  for (std::size_t i = 0; i < elements.value.size(); ++i) spec.elements.push_back(element_from_json(elements.at(i)));
  const Node edges = expect_array(required(top, "edges"));
  for (std::size_t i = 0; i < edges.value.size(); ++i) {
    const Node edge = edges.at(i);
    if (!edge.value.is_array() || edge.value.size() != 2) edge.fail("expected an edge [from, to]");
    spec.edges.emplace_back(as_string(edge.at(std::size_t{0})), as_string(edge.at(std::size_t{1})));
  }
  return spec;
}

}  // namespace qcalc::io
