#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "slab/graph.hpp"
#include "slab/labeling.hpp"

namespace slab {

struct BruteForceResult {
  Objective value = 0;
  Labeling labeling;
};

/// Exhaustive depth-first search over label sequences with an independent
/// degree-sorting bound. Throws SizeLimitError when |V| > node_limit.
BruteForceResult brute_force(const Graph& g, NodeId node_limit = 12);

/// Labels 1..k placed on partial[0..k-1].
///
/// fixed_cost sums, over edges with at least one labeled endpoint, the
/// smaller endpoint label; it is final because all later labels exceed k.
struct BnBNode {
  std::vector<NodeId> partial;
  Objective fixed_cost = 0;
  Objective lb = 0;
};

/// Builds a node for the given label prefix and fills in fixed_cost and lb.
/// Throws LabelingError on repeated or out-of-range nodes.
BnBNode make_bnb_node(const Graph& g, std::span<const NodeId> partial);

/// Residual graph on the unlabeled nodes that still have an unlabeled neighbour.
Graph residual_graph(const Graph& g, std::span<const NodeId> partial);

/// fixed_cost + k * |E(residual)| + extended dual-ascent value of the residual.
Objective residual_bound(const Graph& g, const BnBNode& node);

struct BnBOptions {
  std::optional<double> time_limit_s;
  std::optional<std::int64_t> node_limit;      // explored nodes
  std::int64_t max_open_nodes = 2'000'000;     // open list size before giving up
  std::uint64_t incumbent_seed = 0;            // tie seed of the root heuristic
  bool greedy_completion = true;               // try a greedy completion at each expanded node
  bool memoize_bounds = true;
  bool experimental_dominance = false;         // prune prefixes covering an already-seen label set at no lower fixed cost
};

struct SearchStats {
  std::int64_t explored = 0;
  std::int64_t pruned = 0;
  std::int64_t memo_hits = 0;
  double time_ms = 0;
  Objective lb = 0;
  Objective ub = 0;
  bool proven_optimal = false;
};

struct BnBResult {
  Objective lb = 0;
  Objective ub = 0;
  Labeling labeling;  // attains ub
  SearchStats stats;
};

/// Best-first branch and bound assigning labels 1, 2, ... in sequence. Stops on
/// any limit with a proven bracket [lb, ub].
BnBResult branch_and_bound(const Graph& g, const BnBOptions& options = {});

}  // namespace slab
