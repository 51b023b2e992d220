#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slab/dual_ascent.hpp"
#include "slab/graph.hpp"
#include "slab/labeling.hpp"

namespace slab {

/// Fixed-point multipliers: every stored value is a multiple of 1/kScale.
///
/// delta[e][k-1] dualizes d_e^k <= x_i^k + x_j^k for edge e = (i,j); entries
/// past the end of delta[e] are zero. lambda[T*(n-1) + t-1] dualizes the
/// triangle inequality of triangle T over the label prefix 1..t.
struct Multipliers {
  static constexpr std::int64_t kScale = std::int64_t{1} << 20;

  NodeId num_nodes = 0;
  std::vector<std::vector<std::int64_t>> delta;
  std::vector<Triangle> triangles;
  std::vector<std::int64_t> lambda;

  std::int64_t delta_at(EdgeId e, Label k) const {
    const auto& d = delta[static_cast<std::size_t>(e)];
    return static_cast<std::size_t>(k) <= d.size() ? d[static_cast<std::size_t>(k - 1)] : 0;
  }
  /// Grows delta[e] as needed.
  void set_delta(EdgeId e, Label k, std::int64_t scaled);

  std::int64_t lambda_at(std::size_t tri, Label t) const {
    return lambda[tri * static_cast<std::size_t>(num_nodes - 1) + static_cast<std::size_t>(t - 1)];
  }
  std::int64_t& lambda_ref(std::size_t tri, Label t) {
    return lambda[tri * static_cast<std::size_t>(num_nodes - 1) + static_cast<std::size_t>(t - 1)];
  }
};

/// All-zero multipliers. With `use_triangles`, every triangle gets n-1 prefix
/// multipliers unless count*(n-1) exceeds `triangle_cap`, in which case none are
/// kept and `dropped` (if given) is set.
Multipliers zero_multipliers(const Graph& g, bool use_triangles, std::size_t triangle_cap = 1'000'000,
                             bool* dropped = nullptr);

/// Copies delta_e^k = max(0, K_e - k + 1) from a dual-ascent solution.
void load_dual_deltas(Multipliers& m, const DualSolution& dual);

struct XSubproblem {
  Labeling labeling;          // x_i^k = 1 iff labeling.label(i) == k
  std::int64_t value = 0;     // scaled maximum of sum coeff(i,k) x_i^k
};

/// Maximum-weight assignment of nodes to labels. Among optimal assignments the
/// one closest to the identity (fewest nodes off label i+1) is returned.
XSubproblem solve_x_subproblem(const Graph& g, const Multipliers& m);

struct DSubproblem {
  std::vector<Label> chosen;  // per edge
  std::int64_t total = 0;     // scaled
};

/// Per edge, the label k minimising k + delta_e^k + triangle suffix terms; smallest k on ties.
DSubproblem solve_d_subproblem(const Graph& g, const Multipliers& m);

struct RelaxationValue {
  std::int64_t scaled = 0;  // exact z_R times kScale
  Objective bound = 0;      // ceil(z_R), valid because SL values are integers
  double value() const noexcept { return static_cast<double>(scaled) / static_cast<double>(Multipliers::kScale); }
};

RelaxationValue lagrangian_value(const Graph& g, const Multipliers& m);

struct SubgradientParams {
  double beta_init = 2.0;
  std::int32_t tau = 7;
  std::int32_t max_iter = 500;
  double stop_gap = 1.0;
  double stop_mu = 1e-5;
  double stop_gnorm = 1e-6;
  bool use_triangles = true;
  std::size_t triangle_cap = 1'000'000;
  std::optional<double> time_limit_s;
  std::uint64_t tie_seed = 0;
};

/// Throws ParameterError on beta outside (0,2], nonpositive thresholds or tau/max_iter < 1.
void validate(const SubgradientParams& p);

enum class StopReason { Gap, StepSize, Subgradient, IterationLimit, TimeLimit };

std::string_view stop_reason_name(StopReason r);

struct SubgradientStep {
  std::int32_t iter = 0;
  double z_r = 0;
  Objective z_lb = 0;
  Objective z_i = 0;
  double beta = 0;
  double mu = 0;
};

struct LagrangianResult {
  Objective z_lb = 0;
  Objective z_i = 0;
  Labeling best_labeling;
  std::int32_t iterations = 0;
  StopReason stop = StopReason::IterationLimit;
  std::vector<SubgradientStep> trace;
  std::vector<std::int64_t> z_r_scaled;  // exact z_R per iteration
  std::vector<std::string> warnings;
};

/// Subgradient optimisation started from dual-ascent deltas and zero triangle
/// multipliers. Edgeless graphs return z_lb = z_i = 0 without iterating.
LagrangianResult run_subgradient(const Graph& g, const SubgradientParams& params = {});

}  // namespace slab
