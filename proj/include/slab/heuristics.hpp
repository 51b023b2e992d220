#pragma once

#include <cstdint>

#include "slab/graph.hpp"
#include "slab/labeling.hpp"

namespace slab {

struct HeuristicResult {
  Labeling labeling;
  Objective value = 0;
};

/// Repeatedly labels an unlabeled node of maximum degree in the shrinking
/// residual graph with the smallest unused label. Ties go to the lowest node
/// index when tie_seed == 0, otherwise uniformly via Rng(tie_seed).
HeuristicResult greedy_label(const Graph& g, std::uint64_t tie_seed = 0);

/// Label-pair exchange local search. For the node holding label k, only
/// partners labeled k' <= min(k, largest edge contribution at that node) are
/// tried; the first strictly improving exchange is applied. Stops after a full
/// sweep over k = 1..n without improvement.
HeuristicResult local_search(const Graph& g, Labeling phi);

/// greedy_label followed by local_search.
HeuristicResult starting_heuristic(const Graph& g, std::uint64_t tie_seed = 0);

/// Labels nodes greedily by residual degree but keeps the labels already fixed in `prefix`
/// (prefix[k-1] holds label k). Used to complete partial labelings.
Labeling greedy_completion(const Graph& g, std::span<const NodeId> prefix);

}  // namespace slab
