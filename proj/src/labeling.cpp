#include "slab/labeling.hpp"

#include <algorithm>
#include <string>

#include "slab/error.hpp"

namespace slab {

Labeling::Labeling(std::vector<Label> labels) : label_(std::move(labels)) {
  const auto n = label_.size();
  node_.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const Label k = label_[i];
    if (k < 1 || static_cast<std::size_t>(k) > n) {
      throw LabelingError("node " + std::to_string(i) + " has label " + std::to_string(k) +
                          " outside 1.." + std::to_string(n));
    }
    auto& slot = node_[static_cast<std::size_t>(k - 1)];
    if (slot != -1) {
      throw LabelingError("label " + std::to_string(k) + " used by nodes " + std::to_string(slot) +
                          " and " + std::to_string(i));
    }
    slot = static_cast<NodeId>(i);
  }
}

Labeling Labeling::from_order(std::span<const NodeId> order) {
  std::vector<Label> labels(order.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const NodeId i = order[k];
    if (i < 0 || static_cast<std::size_t>(i) >= order.size()) {
      throw LabelingError("order entry " + std::to_string(i) + " is not a node");
    }
    labels[static_cast<std::size_t>(i)] = static_cast<Label>(k + 1);
  }
  return Labeling(std::move(labels));
}

Labeling Labeling::identity(NodeId n) {
  std::vector<Label> labels(static_cast<std::size_t>(n));
  for (NodeId i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
  return Labeling(std::move(labels));
}

void Labeling::swap_nodes(NodeId i, NodeId j) {
  auto& li = label_[static_cast<std::size_t>(i)];
  auto& lj = label_[static_cast<std::size_t>(j)];
  std::swap(li, lj);
  node_[static_cast<std::size_t>(li - 1)] = i;
  node_[static_cast<std::size_t>(lj - 1)] = j;
}

Objective sl_value(const Graph& g, const Labeling& phi) {
  if (phi.size() != g.num_nodes()) {
    throw LabelingError("labeling has " + std::to_string(phi.size()) + " entries, graph has " +
                        std::to_string(g.num_nodes()) + " nodes");
  }
  Objective total = 0;
  for (const Edge& e : g.edges()) total += std::min(phi.label(e.u), phi.label(e.v));
  return total;
}

Objective exchange_delta(const Graph& g, const Labeling& phi, NodeId i, NodeId j) {
  const Label li = phi.label(i);
  const Label lj = phi.label(j);
  Objective delta = 0;
  // the edge (i,j) itself keeps min(li,lj) and is skipped on both sides
  for (const Incidence& inc : g.neighbors(i)) {
    if (inc.neighbor == j) continue;
    const Label lo = phi.label(inc.neighbor);
    delta += std::min(lj, lo) - std::min(li, lo);
  }
  for (const Incidence& inc : g.neighbors(j)) {
    if (inc.neighbor == i) continue;
    const Label lo = phi.label(inc.neighbor);
    delta += std::min(li, lo) - std::min(lj, lo);
  }
  return delta;
}

}  // namespace slab
