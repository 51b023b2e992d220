#include "slab/heuristics.hpp"

#include <algorithm>
#include <vector>

#include "slab/error.hpp"
#include "slab/rng.hpp"

namespace slab {

namespace {

/// Max-residual-degree greedy over the nodes not yet in `order`.
void extend_greedy(const Graph& g, std::vector<NodeId>& order, std::uint64_t tie_seed) {
  const NodeId n = g.num_nodes();
  std::vector<char> labeled(static_cast<std::size_t>(n), 0);
  for (NodeId i : order) labeled[static_cast<std::size_t>(i)] = 1;
  std::vector<std::int32_t> residual(static_cast<std::size_t>(n), 0);
  for (NodeId i = 0; i < n; ++i) {
    if (labeled[static_cast<std::size_t>(i)]) continue;
    for (const Incidence& inc : g.neighbors(i)) {
      if (!labeled[static_cast<std::size_t>(inc.neighbor)]) ++residual[static_cast<std::size_t>(i)];
    }
  }

  Rng rng(tie_seed);
  std::vector<NodeId> ties;
  while (static_cast<NodeId>(order.size()) < n) {
    std::int32_t best = -1;
    ties.clear();
    for (NodeId i = 0; i < n; ++i) {
      if (labeled[static_cast<std::size_t>(i)]) continue;
      const auto d = residual[static_cast<std::size_t>(i)];
      if (d > best) {
        best = d;
        ties.assign(1, i);
      } else if (d == best && tie_seed != 0) {
        ties.push_back(i);
      }
    }
    const NodeId pick = ties.size() == 1 ? ties[0] : ties[static_cast<std::size_t>(rng.below(ties.size()))];
    labeled[static_cast<std::size_t>(pick)] = 1;
    order.push_back(pick);
    for (const Incidence& inc : g.neighbors(pick)) --residual[static_cast<std::size_t>(inc.neighbor)];
  }
}

}  // namespace

HeuristicResult greedy_label(const Graph& g, std::uint64_t tie_seed) {
  std::vector<NodeId> order;
  order.reserve(static_cast<std::size_t>(g.num_nodes()));
  extend_greedy(g, order, tie_seed);
  auto phi = Labeling::from_order(order);
  const auto value = sl_value(g, phi);
  return {std::move(phi), value};
}

Labeling greedy_completion(const Graph& g, std::span<const NodeId> prefix) {
  std::vector<NodeId> order(prefix.begin(), prefix.end());
  extend_greedy(g, order, 0);
  return Labeling::from_order(order);
}

HeuristicResult local_search(const Graph& g, Labeling phi) {
  if (phi.size() != g.num_nodes()) throw LabelingError("labeling size does not match graph");
  Objective value = sl_value(g, phi);
  const NodeId n = g.num_nodes();

  bool improve = true;
  while (improve) {
    improve = false;
    for (Label k = 1; k <= n; ++k) {
      const NodeId i = phi.node_at(k);
      Label max_contrib = 0;
      for (const Incidence& inc : g.neighbors(i)) {
        max_contrib = std::max(max_contrib, std::min(k, phi.label(inc.neighbor)));
      }
      const Label limit = std::min(k, max_contrib);
      for (Label kp = 1; kp <= limit; ++kp) {
        if (kp == k) continue;
        const NodeId j = phi.node_at(kp);
        const Objective delta = exchange_delta(g, phi, i, j);
        if (delta < 0) {
          phi.swap_nodes(i, j);
          value += delta;
          improve = true;
          break;
        }
      }
    }
  }
  return {std::move(phi), value};
}

HeuristicResult starting_heuristic(const Graph& g, std::uint64_t tie_seed) {
  auto greedy = greedy_label(g, tie_seed);
  return local_search(g, std::move(greedy.labeling));
}

}  // namespace slab
