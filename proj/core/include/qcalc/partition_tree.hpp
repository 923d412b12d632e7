#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qcalc {

/// One node as supplied by the caller. Leaves carry a weight (default 1, an
/// a-priori-equivalent base state); internal nodes list their children and
/// take their value from them.
struct TreeNodeSpec {
  std::string id;
  std::vector<std::string> children;
  double weight = 1.0;
};

/// Source-to-destination path <destination source>; destination must lie at
/// or below source.
struct TreePath {
  std::string destination;
  std::string source;
};

/// Immutable rooted partition tree. Node values are fixed at construction by
/// the sum rule, so value(parent) == sum of value(children) at every node.
class PartitionTree {
 public:
  /// Validates shape (unique ids, known children, single parent, no cycles,
  /// every node reachable from root) and computes node values.
  PartitionTree(std::vector<TreeNodeSpec> nodes, std::string root);

  const std::string& root() const noexcept { return root_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool contains(std::string_view id) const;
  /// Node ids in depth-first pre-order from the root.
  std::vector<std::string> ids() const;
  const std::vector<std::string>& children(std::string_view id) const;
  bool is_leaf(std::string_view id) const;

  double node_value(std::string_view id) const;
  /// True when `descendant` equals `ancestor` or lies below it.
  bool covers(std::string_view ancestor, std::string_view descendant) const;

  /// value(destination) / value(source).
  double path_value(const TreePath& path) const;

  /// Value of the combined destination of sibling paths sharing one source.
  /// Destinations must be pairwise disjoint (neither covers the other).
  double sibling_path_sum(std::span<const TreePath> paths) const;

 private:
  struct Node {
    std::vector<std::string> children;
    std::string parent;
    double value = 0.0;
    std::size_t depth = 0;
  };

  const Node& node(std::string_view id) const;
  void check_path(const TreePath& path) const;

  std::unordered_map<std::string, Node> nodes_;
  std::string root_;
};

/// Product rule for chained path values (scale factor fixed to 1).
constexpr double chain(double first, double second) noexcept { return first * second; }

struct BayesResult {
  std::vector<double> posterior;
  double evidence = 0.0;
};

/// Posterior and evidence over K exclusive, exhaustive hypotheses.
/// `prior` must be non-negative and sum to 1 within `normalization_tol`.
BayesResult bayes(std::span<const double> prior, std::span<const double> likelihood,
                  double normalization_tol = 1e-9);

}  // namespace qcalc
