#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ane {

using FeatureEntry = std::pair<std::uint32_t, double>;  // (feature index, value)
using FeatureRow = std::vector<FeatureEntry>;

// Per-node sparse real-valued feature vectors over K feature entries.
// A row may be empty: a node with no known attributes.
class AttributeMatrix {
 public:
  AttributeMatrix() = default;
  AttributeMatrix(std::size_t num_nodes, std::size_t num_features)
      : num_features_(num_features), rows_(num_nodes) {}

  std::size_t num_nodes() const { return rows_.size(); }
  std::size_t num_features() const { return num_features_; }

  std::span<const FeatureEntry> row(std::size_t node) const { return rows_[node]; }

  // Entries must have strictly increasing indices < num_features and finite
  // values; throws otherwise.
  void set_row(std::size_t node, FeatureRow row);

  friend bool operator==(const AttributeMatrix& a, const AttributeMatrix& b) {
    return a.num_features_ == b.num_features_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t num_features_ = 0;
  std::vector<FeatureRow> rows_;
};

// Sparse text format: header "K=<int>", then "node k1:v1 k2:v2 ..." lines.
// Nodes absent from the file keep an empty row.
AttributeMatrix load_attributes(const std::string& path, std::size_t num_nodes);

void save_attributes(const AttributeMatrix& attrs, const std::string& path);

// Per-node optional class label; -1 marks an unlabeled node.
struct LabelMap {
  std::vector<int> labels;  // size num_nodes
  std::size_t num_classes = 0;

  bool has_label(std::size_t node) const { return labels[node] >= 0; }
  std::vector<std::uint32_t> labeled_nodes() const;
};

// "node<TAB>label" lines (any whitespace accepted).
LabelMap load_labels(const std::string& path, std::size_t num_nodes);

void save_labels(const LabelMap& labels, const std::string& path);

}  // namespace ane
