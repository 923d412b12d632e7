#include "qcalc/partition_tree.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <unordered_set>
#include <utility>

#include "qcalc/errors.hpp"

namespace qcalc {

PartitionTree::PartitionTree(std::vector<TreeNodeSpec> specs, std::string root)
    : root_(std::move(root)) {
  for (auto& spec : specs) {
    if (spec.id.empty()) throw DomainError("PartitionTree: node with empty id");
    if (spec.children.empty() && !(std::isfinite(spec.weight) && spec.weight >= 0.0)) {
      throw DomainError("PartitionTree: leaf '" + spec.id + "' needs a finite non-negative weight");
    }
    Node node;
    node.children = std::move(spec.children);
    node.value = spec.weight;
    if (!nodes_.emplace(spec.id, std::move(node)).second) {
      throw DomainError("PartitionTree: duplicate node id '" + spec.id + "'");
    }
  }
  if (!nodes_.contains(root_)) throw DomainError("PartitionTree: root '" + root_ + "' is not a node");

  for (auto& [id, node] : nodes_) {
    std::unordered_set<std::string_view> seen;
    for (const auto& child : node.children) {
      auto it = nodes_.find(child);
      if (it == nodes_.end()) {
        throw DomainError("PartitionTree: node '" + id + "' lists unknown child '" + child + "'");
      }
      if (!seen.insert(child).second) {
        throw DomainError("PartitionTree: node '" + id + "' lists child '" + child + "' twice");
      }
      if (child == root_) throw DomainError("PartitionTree: root '" + root_ + "' has a parent");
      if (!it->second.parent.empty()) {
        throw DomainError("PartitionTree: node '" + child + "' has two parents ('" +
                          it->second.parent + "' and '" + id + "')");
      }
      it->second.parent = id;
    }
  }

  // Every node has at most one parent and the root has none, so an
  // unreachable node can only sit on a parent cycle or in a detached tree.
  std::size_t visited = 0;
  std::function<double(const std::string&, std::size_t)> evaluate =
      [&](const std::string& id, std::size_t depth) {
        Node& node = nodes_.at(id);
        ++visited;
        node.depth = depth;
        if (!node.children.empty()) {
          node.value = 0.0;
          for (const auto& child : node.children) node.value += evaluate(child, depth + 1);
        }
        return node.value;
      };
  evaluate(root_, 0);
  if (visited != nodes_.size()) {
    throw DomainError("PartitionTree: " + std::to_string(nodes_.size() - visited) +
                      " node(s) not reachable from root '" + root_ + "'");
  }
}

const PartitionTree::Node& PartitionTree::node(std::string_view id) const {
  auto it = nodes_.find(std::string(id));
  if (it == nodes_.end()) throw DomainError("PartitionTree: unknown node '" + std::string(id) + "'");
  return it->second;
}

bool PartitionTree::contains(std::string_view id) const { return nodes_.contains(std::string(id)); }

std::vector<std::string> PartitionTree::ids() const {
  std::vector<std::string> out;
  out.reserve(nodes_.size());
  std::function<void(const std::string&)> walk = [&](const std::string& id) {
    out.push_back(id);
    for (const auto& child : nodes_.at(id).children) walk(child);
  };
  walk(root_);
  return out;
}

const std::vector<std::string>& PartitionTree::children(std::string_view id) const {
  return node(id).children;
}

bool PartitionTree::is_leaf(std::string_view id) const { return node(id).children.empty(); }

double PartitionTree::node_value(std::string_view id) const { return node(id).value; }

bool PartitionTree::covers(std::string_view ancestor, std::string_view descendant) const {
  const Node& top = node(ancestor);
  const Node* cur = &node(descendant);
  std::string_view cur_id = descendant;
  while (cur->depth > top.depth) {
    cur_id = cur->parent;
    cur = &nodes_.at(cur->parent);
  }
  return cur_id == ancestor;
}

void PartitionTree::check_path(const TreePath& path) const {
  if (!covers(path.source, path.destination)) {
    throw DomainError("path <" + path.destination + " " + path.source + ">: destination '" +
                      path.destination + "' is not within source '" + path.source + "'");
  }
}

double PartitionTree::path_value(const TreePath& path) const {
  check_path(path);
  const double source = node_value(path.source);
  if (source == 0.0) {
    throw EmptyConditioning("path <" + path.destination + " " + path.source + ">: source '" +
                            path.source + "' has zero value");
  }
  return node_value(path.destination) / source;
}

double PartitionTree::sibling_path_sum(std::span<const TreePath> paths) const {
  if (paths.empty()) throw DomainError("sibling_path_sum: no paths");
  const std::string& source = paths.front().source;
  for (const auto& p : paths) {
    if (p.source != source) {
      throw DomainError("sibling_path_sum: paths have different sources ('" + source + "' and '" +
                        p.source + "')");
    }
    check_path(p);
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      const auto& a = paths[i].destination;
      const auto& b = paths[j].destination;
      if (covers(a, b) || covers(b, a)) {
        throw DomainError("sibling_path_sum: destinations '" + a + "' and '" + b + "' overlap");
      }
    }
  }
  double total = 0.0;
  for (const auto& p : paths) total += path_value(p);
  return total;
}

BayesResult bayes(std::span<const double> prior, std::span<const double> likelihood,
                  double normalization_tol) {
  if (prior.empty()) throw DomainError("bayes: need at least one hypothesis");
  if (prior.size() != likelihood.size()) {
    throw DimensionMismatch("bayes: prior has " + std::to_string(prior.size()) +
                            " entries but likelihood has " + std::to_string(likelihood.size()));
  }
  for (std::size_t k = 0; k < prior.size(); ++k) {
    if (!(std::isfinite(prior[k]) && prior[k] >= 0.0)) {
      throw DomainError("bayes: prior[" + std::to_string(k) + "] is not a finite non-negative value");
    }
    if (!(std::isfinite(likelihood[k]) && likelihood[k] >= 0.0)) {
      throw DomainError("bayes: likelihood[" + std::to_string(k) +
                        "] is not a finite non-negative value");
    }
  }
  const double mass = std::accumulate(prior.begin(), prior.end(), 0.0);
  if (std::abs(mass - 1.0) > normalization_tol) {
    throw DomainError("bayes: prior sums to " + std::to_string(mass) + ", not 1");
  }

  BayesResult result;
  result.posterior.resize(prior.size());
  for (std::size_t k = 0; k < prior.size(); ++k) {
    result.posterior[k] = prior[k] * likelihood[k];
    result.evidence += result.posterior[k];
  }
  if (!(result.evidence > 0.0)) {
    throw EmptyConditioning("bayes: evidence is zero, the data are impossible under every hypothesis");
  }
  for (double& p : result.posterior) p /= result.evidence;
  return result;
}

}  // namespace qcalc
