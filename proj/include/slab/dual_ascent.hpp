#pragma once

#include <cstdint>
#include <vector>

#include "slab/graph.hpp"

namespace slab {

/// Integral solution of the dual of the (x, d) assignment formulation:
///
///   max  -sum_k alpha_k + sum_i beta_i + sum_e gamma_e
///   s.t. -alpha_k + beta_i + sum_{e incident to i} delta_e^k <= 0   for all k, i
///        gamma_e - delta_e^k <= k                                   for all e, k
///        delta >= 0
///
/// alpha is stored as a nonnegative magnitude. delta is kept compactly: edge e
/// was raised in every step 1..last_active_step[e], so delta_e^k = max(0, K_e - k + 1).
struct DualSolution {
  std::vector<Objective> alpha;              // per label 1..n (index k-1)
  std::vector<Objective> beta;               // per node, always zero from the ascent
  std::vector<Objective> gamma;              // per edge
  std::vector<std::int32_t> last_active_step;  // per edge
  Objective objective = 0;

  Objective delta(EdgeId e, Label k) const {
    const auto K = last_active_step[static_cast<std::size_t>(e)];
    return k <= K ? static_cast<Objective>(K - k + 1) : 0;
  }

  /// Row-major |E| x n matrix, entry [e*n + (k-1)] = delta_e^k.
  std::vector<Objective> dense_delta(NodeId n) const;
};

struct AscentStep {
  std::int32_t step = 0;          // k-bar
  Objective alpha_increment = 0;  // chosen alpha-bar
  std::int32_t active_edges = 0;
  Objective net_change = 0;
  Objective objective = 0;        // cumulative z_D after the step
};

struct DualAscentResult {
  DualSolution solution;
  std::vector<AscentStep> trace;

  Objective bound() const noexcept { return solution.objective; }
};

/// Every step raises alpha_1..alpha_k by the maximum degree and all gamma_e by
/// one, as long as |E| - k * maxdeg > 0.
DualAscentResult dual_ascent_simple(const Graph& g);

/// Per step, tries every alpha-bar in 1..(max active degree), thins the active
/// edge set until every node has active degree <= alpha-bar, and commits the
/// alpha-bar with the largest positive net change |active| - k * alpha-bar
/// (smallest alpha-bar on ties).
DualAscentResult dual_ascent_extended(const Graph& g);

struct DualCheck {
  bool feasible = false;
  Objective objective = 0;  // recomputed from the variables
};

/// Checks every dual constraint exactly. Throws Error on dimension mismatch.
DualCheck check_dual_feasible(const Graph& g, const DualSolution& d);

}  // namespace slab
