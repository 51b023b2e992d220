#pragma once

#include <span>
#include <vector>

#include "slab/graph.hpp"

namespace slab {

/// Bijection node -> label in 1..n with O(1) inverse lookup.
class Labeling {
 public:
  Labeling() = default;

  /// `labels[i]` is the label of node i. Throws LabelingError unless the
  /// values are exactly a permutation of 1..labels.size().
  explicit Labeling(std::vector<Label> labels);

  /// `order[k-1]` is the node receiving label k.
  static Labeling from_order(std::span<const NodeId> order);

  /// Node i gets label i+1.
  static Labeling identity(NodeId n);

  NodeId size() const noexcept { return static_cast<NodeId>(label_.size()); }
  Label label(NodeId i) const { return label_[static_cast<std::size_t>(i)]; }
  NodeId node_at(Label k) const { return node_[static_cast<std::size_t>(k - 1)]; }
  std::span<const Label> labels() const noexcept { return label_; }

  /// Exchanges the labels of nodes i and j.
  void swap_nodes(NodeId i, NodeId j);

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Label> label_;
  std::vector<NodeId> node_;
};

/// Sum over edges of the smaller endpoint label. Throws LabelingError on size mismatch.
Objective sl_value(const Graph& g, const Labeling& phi);

/// sl_value after swapping the labels of i and j minus sl_value before.
/// Touches only edges incident to i or j.
Objective exchange_delta(const Graph& g, const Labeling& phi, NodeId i, NodeId j);

}  // namespace slab
