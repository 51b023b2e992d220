#include "slab/lagrangian.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>

#include "slab/assignment.hpp"
#include "slab/error.hpp"
#include "slab/heuristics.hpp"

namespace slab {

namespace {

constexpr std::int64_t kScale = Multipliers::kScale;

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {  // b > 0
  const std::int64_t q = a / b;
  return (a % b != 0 && a > 0) ? q + 1 : q;
}

/// suffix[T*n + k-1] = sum_{t=k}^{n-1} lambda_{T,t}; the entry for k = n is zero.
std::vector<std::int64_t> triangle_suffixes(const Multipliers& m) {
  const auto n = static_cast<std::size_t>(m.num_nodes);
  std::vector<std::int64_t> suffix(m.triangles.size() * n, 0);
  for (std::size_t t = 0; t < m.triangles.size(); ++t) {
    std::int64_t run = 0;
    for (std::size_t k = n - 1; k >= 1; --k) {
      run += m.lambda_at(t, static_cast<Label>(k));
      suffix[t * n + k - 1] = run;
    }
  }
  return suffix;
}

}  // namespace

void Multipliers::set_delta(EdgeId e, Label k, std::int64_t scaled) {
  auto& d = delta[static_cast<std::size_t>(e)];
  if (static_cast<std::size_t>(k) > d.size()) {
    if (scaled == 0) return;
    d.resize(static_cast<std::size_t>(k), 0);
  }
  d[static_cast<std::size_t>(k - 1)] = scaled;
}

Multipliers zero_multipliers(const Graph& g, bool use_triangles, std::size_t triangle_cap, bool* dropped) {
  Multipliers m;
  m.num_nodes = g.num_nodes();
  m.delta.assign(static_cast<std::size_t>(g.num_edges()), {});
  if (dropped) *dropped = false;
  if (use_triangles && g.num_nodes() >= 2) {
    auto tris = enumerate_triangles(g);
    const auto width = static_cast<std::size_t>(g.num_nodes() - 1);
    if (!tris.empty() && tris.size() > triangle_cap / width) {
      if (dropped) *dropped = true;
    } else {
      m.triangles = std::move(tris);
      m.lambda.assign(m.triangles.size() * width, 0);
    }
  }
  return m;
}

void load_dual_deltas(Multipliers& m, const DualSolution& dual) {
  if (dual.last_active_step.size() != m.delta.size()) throw ParameterError("dual solution does not match multipliers");
  for (std::size_t e = 0; e < m.delta.size(); ++e) {
    const auto steps = dual.last_active_step[e];
    m.delta[e].assign(static_cast<std::size_t>(std::max(steps, 0)), 0);
    for (Label k = 1; k <= steps; ++k) m.delta[e][static_cast<std::size_t>(k - 1)] = (steps - k + 1) * kScale;
  }
}

XSubproblem solve_x_subproblem(const Graph& g, const Multipliers& m) {
  const NodeId n = g.num_nodes();
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::int64_t> coeff(un * un, 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const auto& d = m.delta[static_cast<std::size_t>(e)];
    const auto len = std::min(d.size(), un);
    for (std::size_t k = 0; k < len; ++k) {
      coeff[static_cast<std::size_t>(ed.u) * un + k] += d[k];
      coeff[static_cast<std::size_t>(ed.v) * un + k] += d[k];
    }
  }
  if (!m.triangles.empty()) {
    const auto suffix = triangle_suffixes(m);
    for (std::size_t t = 0; t < m.triangles.size(); ++t) {
      for (NodeId i : m.triangles[t].nodes) {
        for (std::size_t k = 0; k < un; ++k) coeff[static_cast<std::size_t>(i) * un + k] += suffix[t * un + k];
      }
    }
  }

  // Scaling by n+1 leaves room for a tie-break term below one unit of the objective.
  CostMatrix cost(un);
  const std::int64_t spread = n + 1;
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t k = 0; k < un; ++k) cost(i, k) = -spread * coeff[i * un + k] + (k != i ? 1 : 0);
  }
  const Assignment a = hungarian_min(cost);

  std::vector<Label> labels(un);
  std::int64_t value = 0;
  for (std::size_t i = 0; i < un; ++i) {
    const auto k = static_cast<std::size_t>(a.column_of[i]);
    labels[i] = static_cast<Label>(k + 1);
    value += coeff[i * un + k];
  }
  return {Labeling(std::move(labels)), value};
}

DSubproblem solve_d_subproblem(const Graph& g, const Multipliers& m) {
  const NodeId n = g.num_nodes();
  const auto un = static_cast<std::size_t>(n);
  const auto m_edges = static_cast<std::size_t>(g.num_edges());

  // Per-edge accumulated triangle suffixes, only for edges lying on a triangle.
  std::vector<std::int32_t> slot(m_edges, -1);
  std::vector<std::int64_t> tri_cost;
  if (!m.triangles.empty()) {
    const auto suffix = triangle_suffixes(m);
    std::int32_t used = 0;
    for (std::size_t t = 0; t < m.triangles.size(); ++t) {
      for (EdgeId e : m.triangles[t].edges) {
        auto& s = slot[static_cast<std::size_t>(e)];
        if (s < 0) {
          s = used++;
          tri_cost.resize(static_cast<std::size_t>(used) * un, 0);
        }
        for (std::size_t k = 0; k < un; ++k) tri_cost[static_cast<std::size_t>(s) * un + k] += suffix[t * un + k];
      }
    }
  }

  DSubproblem out;
  out.chosen.resize(m_edges);
  for (std::size_t e = 0; e < m_edges; ++e) {
    const auto& d = m.delta[e];
    const std::int32_t s = slot[e];
    // Without triangle terms the cost is k*kScale beyond d.size(), so d.size()+1 suffices.
    const std::size_t last = s >= 0 ? un : std::min(un, d.size() + 1);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    Label best_k = 1;
    for (std::size_t k = 1; k <= last; ++k) {
      std::int64_t c = static_cast<std::int64_t>(k) * kScale;
      if (k <= d.size()) c += d[k - 1];
      if (s >= 0) c += tri_cost[static_cast<std::size_t>(s) * un + k - 1];
      if (c < best) {
        best = c;
        best_k = static_cast<Label>(k);
      }
    }
    out.chosen[e] = best_k;
    out.total += best;
  }
  return out;
}

namespace {

RelaxationValue combine(const Multipliers& m, const XSubproblem& x, const DSubproblem& d) {
  std::int64_t lambda_sum = 0;
  for (auto l : m.lambda) lambda_sum += l;
  RelaxationValue r;
  r.scaled = d.total - x.value - lambda_sum;
  r.bound = ceil_div(r.scaled, kScale);
  return r;
}

}  // namespace

RelaxationValue lagrangian_value(const Graph& g, const Multipliers& m) {
  if (g.num_edges() == 0) return {};
  return combine(m, solve_x_subproblem(g, m), solve_d_subproblem(g, m));
}

void validate(const SubgradientParams& p) {
  if (!(p.beta_init > 0.0 && p.beta_init <= 2.0)) throw ParameterError("beta must lie in (0, 2]");
  if (p.tau < 1) throw ParameterError("tau must be >= 1");
  if (p.max_iter < 1) throw ParameterError("max_iter must be >= 1");
  if (!(p.stop_gap > 0.0 && p.stop_mu > 0.0 && p.stop_gnorm > 0.0)) throw ParameterError("stopping thresholds must be positive");
  if (p.time_limit_s && !(*p.time_limit_s > 0.0)) throw ParameterError("time limit must be positive");
}

std::string_view stop_reason_name(StopReason r) {
  switch (r) {
    case StopReason::Gap: return "gap";
    case StopReason::StepSize: return "step-size";
    case StopReason::Subgradient: return "subgradient";
    case StopReason::IterationLimit: return "iteration-limit";
    case StopReason::TimeLimit: return "time-limit";
  }
  return "unknown";
}

LagrangianResult run_subgradient(const Graph& g, const SubgradientParams& params) {
  validate(params);
  LagrangianResult result;
  const NodeId n = g.num_nodes();
  const EdgeId m_edges = g.num_edges();
  if (m_edges == 0) {
    result.best_labeling = Labeling::identity(n);
    result.stop = StopReason::Gap;
    return result;
  }

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  bool dropped = false;
  Multipliers mult = zero_multipliers(g, params.use_triangles, params.triangle_cap, &dropped);
  if (dropped) result.warnings.emplace_back("triangle multipliers disabled: count exceeds triangle cap");
  const auto ascent = dual_ascent_extended(g);
  load_dual_deltas(mult, ascent.solution);

  auto incumbent = starting_heuristic(g, params.tie_seed);
  result.best_labeling = std::move(incumbent.labeling);
  result.z_i = incumbent.value;

  std::int64_t best_scaled = std::numeric_limits<std::int64_t>::min();
  result.z_lb = ascent.bound();  // the first z_R is never below it
  double beta = params.beta_init;
  std::int32_t stale = 0;
  const auto un = static_cast<std::size_t>(n);
  // Any nonnegative multipliers give a valid bound; the cap keeps scaled costs inside int64.
  const std::int64_t cap = static_cast<std::int64_t>(n) * kScale;

  struct Component {
    EdgeId edge;
    Label k;
    std::int32_t g;
  };
  std::vector<Component> edge_parts;
  std::vector<std::int32_t> tri_parts(mult.triangles.size() * (un > 0 ? un - 1 : 0));

  for (std::int32_t iter = 1; iter <= params.max_iter; ++iter) {
    if (params.time_limit_s && elapsed() > *params.time_limit_s) {
      result.stop = StopReason::TimeLimit;
      break;
    }
    result.iterations = iter;
    const XSubproblem x = solve_x_subproblem(g, mult);
    const DSubproblem d = solve_d_subproblem(g, mult);
    const RelaxationValue zr = combine(mult, x, d);
    result.z_r_scaled.push_back(zr.scaled);

    if (zr.scaled > best_scaled) {
      best_scaled = zr.scaled;
      stale = 0;
    } else if (++stale >= params.tau) {
      beta /= 2.0;
      stale = 0;
    }
    result.z_lb = std::max(result.z_lb, ceil_div(best_scaled, kScale));

    auto improved = local_search(g, x.labeling);
    if (improved.value < result.z_i) {
      result.z_i = improved.value;
      result.best_labeling = std::move(improved.labeling);
    }

    SubgradientStep step{iter, zr.value(), result.z_lb, result.z_i, beta, 0.0};
    if (static_cast<double>(result.z_i - result.z_lb) < params.stop_gap) {
      result.trace.push_back(step);
      result.stop = StopReason::Gap;
      break;
    }

    // Projected subgradient: drop components that would push a zero multiplier negative.
    double norm2 = 0.0;
    edge_parts.clear();
    for (EdgeId e = 0; e < m_edges; ++e) {
      const Edge& ed = g.edge(e);
      const std::array<Label, 3> ks{x.labeling.label(ed.u), x.labeling.label(ed.v), d.chosen[static_cast<std::size_t>(e)]};
      for (std::size_t a = 0; a < 3; ++a) {
        const Label k = ks[a];
        if ((a >= 1 && k == ks[0]) || (a == 2 && k == ks[1])) continue;
        const std::int32_t gk = (ks[0] == k) + (ks[1] == k) - (ks[2] == k);
        if (gk == 0 || (gk > 0 && mult.delta_at(e, k) == 0)) continue;
        edge_parts.push_back({e, k, gk});
        norm2 += static_cast<double>(gk) * gk;
      }
    }
    for (std::size_t t = 0; t < mult.triangles.size(); ++t) {
      const Triangle& tri = mult.triangles[t];
      std::array<Label, 3> xl{};
      std::array<Label, 3> dl{};
      for (std::size_t a = 0; a < 3; ++a) {
        xl[a] = x.labeling.label(tri.nodes[a]);
        dl[a] = d.chosen[static_cast<std::size_t>(tri.edges[a])];
      }
      for (Label tt = 1; tt <= n - 1; ++tt) {
        std::int32_t gt = 1;
        for (std::size_t a = 0; a < 3; ++a) gt += (xl[a] <= tt) - (dl[a] <= tt);
        if (gt > 0 && mult.lambda_at(t, tt) == 0) gt = 0;
        tri_parts[t * (un - 1) + static_cast<std::size_t>(tt - 1)] = gt;
        norm2 += static_cast<double>(gt) * gt;
      }
    }
    const double norm = std::sqrt(norm2);
    if (norm < params.stop_gnorm) {
      result.trace.push_back(step);
      result.stop = StopReason::Subgradient;
      break;
    }
    const double mu = beta * (static_cast<double>(result.z_i) - zr.value()) / norm2;
    step.mu = mu;
    result.trace.push_back(step);
    if (mu < params.stop_mu) {
      result.stop = StopReason::StepSize;
      break;
    }

    const double scaled_step = mu * static_cast<double>(kScale);
    auto project = [cap](std::int64_t v) { return std::clamp<std::int64_t>(v, 0, cap); };
    for (const Component& c : edge_parts) {
      mult.set_delta(c.edge, c.k, project(mult.delta_at(c.edge, c.k) - std::llround(scaled_step * c.g)));
    }
    for (std::size_t t = 0; t < mult.triangles.size(); ++t) {
      for (Label tt = 1; tt <= n - 1; ++tt) {
        const auto gt = tri_parts[t * (un - 1) + static_cast<std::size_t>(tt - 1)];
        if (gt == 0) continue;
        auto& l = mult.lambda_ref(t, tt);
        l = project(l - std::llround(scaled_step * gt));
      }
    }
    if (iter == params.max_iter) result.stop = StopReason::IterationLimit;
  }
  return result;
}

}  // namespace slab
