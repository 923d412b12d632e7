#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qcalc/errors.hpp"
#include "qcalc/network.hpp"
#include "qcalc/partition_tree.hpp"

namespace qcalc::io {

/// Input file could not be opened or is not valid JSON.
class InputError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Document is JSON but does not match the schema. `pointer()` is the JSON
/// pointer (RFC 6901) of the offending value, e.g. "/elements/3/params/rate".
class SchemaError : public DomainError {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : DomainError(message + " at " + (pointer.empty() ? std::string("/") : pointer)),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

nlohmann::json read_json(const std::filesystem::path& path);

/// {"root": id, "nodes": [{"id", "children"?: [id...], "weight"?: number}]}
PartitionTree tree_from_json(const nlohmann::json& doc);

/// {"elements": [{"id", "kind", "params"?: {...}}], "edges": [[from, to], ...]}
/// Complex numbers are [re, im].
NetworkSpec network_from_json(const nlohmann::json& doc);

inline PartitionTree load_tree(const std::filesystem::path& path) { return tree_from_json(read_json(path)); }
inline NetworkSpec load_network(const std::filesystem::path& path) { return network_from_json(read_json(path)); }

}  // namespace qcalc::io
