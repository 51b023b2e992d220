#include "slab/dual_ascent.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "slab/error.hpp"

namespace slab {

std::vector<Objective> DualSolution::dense_delta(NodeId n) const {
  const auto m = last_active_step.size();
  std::vector<Objective> dense(m * static_cast<std::size_t>(n), 0);
  for (std::size_t e = 0; e < m; ++e) {
    for (Label k = 1; k <= n; ++k) {
      dense[e * static_cast<std::size_t>(n) + static_cast<std::size_t>(k - 1)] = delta(static_cast<EdgeId>(e), k);
    }
  }
  return dense;
}

namespace {

DualSolution zero_dual(const Graph& g) {
  DualSolution d;
  d.alpha.assign(static_cast<std::size_t>(g.num_nodes()), 0);
  d.beta.assign(static_cast<std::size_t>(g.num_nodes()), 0);
  d.gamma.assign(static_cast<std::size_t>(g.num_edges()), 1);
  d.last_active_step.assign(static_cast<std::size_t>(g.num_edges()), 0);
  d.objective = g.num_edges();
  return d;
}

/// Scratch space for evaluating one candidate alpha-bar.
class Thinner {
 public:
  explicit Thinner(const Graph& g) : g_(g) {
    order_.resize(static_cast<std::size_t>(g.num_nodes()));
  }

  /// Copies `active`/`degree` into the candidate buffers and deactivates edges
  /// until every node has active degree <= cap. Returns the surviving edge count.
  std::int32_t thin(const std::vector<char>& active, const std::vector<std::int32_t>& degree,
                    std::int32_t active_count, std::int32_t cap) {
    cand_active_ = active;
    cand_degree_ = degree;
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](NodeId a, NodeId b) {
      return cand_degree_[static_cast<std::size_t>(a)] > cand_degree_[static_cast<std::size_t>(b)];
    });
    std::int32_t count = active_count;
    for (NodeId i : order_) {
      auto& di = cand_degree_[static_cast<std::size_t>(i)];
      if (di <= cap) continue;
      incident_.clear();
      for (const Incidence& inc : g_.neighbors(i)) {
        if (cand_active_[static_cast<std::size_t>(inc.edge)]) incident_.push_back(inc);
      }
      std::sort(incident_.begin(), incident_.end(), [&](const Incidence& a, const Incidence& b) {
        const auto da = cand_degree_[static_cast<std::size_t>(a.neighbor)];
        const auto db = cand_degree_[static_cast<std::size_t>(b.neighbor)];
        if (da != db) return da > db;
        return a.edge < b.edge;
      });
      for (const Incidence& inc : incident_) {
        if (di <= cap) break;
        cand_active_[static_cast<std::size_t>(inc.edge)] = 0;
        --di;
        --cand_degree_[static_cast<std::size_t>(inc.neighbor)];
        --count;
      }
    }
    return count;
  }

  const std::vector<char>& active() const noexcept { return cand_active_; }
  const std::vector<std::int32_t>& degree() const noexcept { return cand_degree_; }

 private:
  const Graph& g_;
  std::vector<NodeId> order_;
  std::vector<Incidence> incident_;
  std::vector<char> cand_active_;
  std::vector<std::int32_t> cand_degree_;
};

}  // namespace

DualAscentResult dual_ascent_simple(const Graph& g) {
  DualAscentResult result;
  const NodeId n = g.num_nodes();
  const EdgeId m = g.num_edges();
  if (m == 0) {
    result.solution = zero_dual(g);
    result.solution.objective = 0;
    return result;
  }
  DualSolution& d = result.solution;
  d = zero_dual(g);
  const Objective max_deg = max_degree(g);

  std::int32_t steps = 0;
  for (std::int32_t k = 1; k <= n; ++k) {
    const Objective net = m - k * max_deg;
    if (net <= 0) break;
    d.objective += net;
    steps = k;
    result.trace.push_back({k, max_deg, m, net, d.objective});
  }
  for (std::int32_t k = 1; k <= steps; ++k) d.alpha[static_cast<std::size_t>(k - 1)] = max_deg * (steps - k + 1);
  std::fill(d.gamma.begin(), d.gamma.end(), 1 + steps);
  std::fill(d.last_active_step.begin(), d.last_active_step.end(), steps);
  return result;
}

DualAscentResult dual_ascent_extended(const Graph& g) {
  DualAscentResult result;
  const NodeId n = g.num_nodes();
  const EdgeId m = g.num_edges();
  if (m == 0) {
    result.solution = zero_dual(g);
    result.solution.objective = 0;
    return result;
  }
  DualSolution& d = result.solution;
  d = zero_dual(g);

  std::vector<char> active(static_cast<std::size_t>(m), 1);
  std::vector<std::int32_t> degree(static_cast<std::size_t>(n));
  for (NodeId i = 0; i < n; ++i) degree[static_cast<std::size_t>(i)] = g.degree(i);
  std::int32_t active_count = m;
  std::vector<Objective> increments;

  Thinner thinner(g);
  std::vector<char> best_active;
  std::vector<std::int32_t> best_degree;

  for (std::int32_t k = 1; k <= n; ++k) {
    const std::int32_t top = *std::max_element(degree.begin(), degree.end());
    if (top == 0) break;
    Objective best_net = 0;
    std::int32_t best_alpha = 0;
    std::int32_t best_count = 0;
    for (std::int32_t alpha = 1; alpha <= top; ++alpha) {
      const Objective bound = active_count - static_cast<Objective>(k) * alpha;
      if (bound <= best_net) break;  // |active(alpha)| <= |active|, larger alpha only worse
      std::int32_t count = active_count;
      if (alpha < top) count = thinner.thin(active, degree, active_count, alpha);
      const Objective net = count - static_cast<Objective>(k) * alpha;
      if (net > best_net) {
        best_net = net;
        best_alpha = alpha;
        best_count = count;
        if (alpha < top) {
          best_active = thinner.active();
          best_degree = thinner.degree();
        } else {
          best_active = active;
          best_degree = degree;
        }
      }
    }
    if (best_alpha == 0) break;
    active.swap(best_active);
    degree.swap(best_degree);
    active_count = best_count;
    for (EdgeId e = 0; e < m; ++e) {
      if (active[static_cast<std::size_t>(e)]) d.last_active_step[static_cast<std::size_t>(e)] = k;
    }
    increments.push_back(best_alpha);
    d.objective += best_net;
    result.trace.push_back({k, best_alpha, active_count, best_net, d.objective});
  }

  Objective suffix = 0;
  for (auto k = static_cast<std::int32_t>(increments.size()); k >= 1; --k) {
    suffix += increments[static_cast<std::size_t>(k - 1)];
    d.alpha[static_cast<std::size_t>(k - 1)] = suffix;
  }
  for (EdgeId e = 0; e < m; ++e) {
    d.gamma[static_cast<std::size_t>(e)] = 1 + d.last_active_step[static_cast<std::size_t>(e)];
  }
  return result;
}

DualCheck check_dual_feasible(const Graph& g, const DualSolution& d) {
  const auto n = static_cast<std::size_t>(g.num_nodes());
  const auto m = static_cast<std::size_t>(g.num_edges());
  if (d.alpha.size() != n || d.beta.size() != n || d.gamma.size() != m || d.last_active_step.size() != m) {
    throw Error("dual solution dimensions do not match graph with " + std::to_string(n) + " nodes and " +
                std::to_string(m) + " edges");
  }

  DualCheck check;
  check.feasible = true;
  for (std::size_t e = 0; e < m; ++e) {
    if (d.last_active_step[e] < 0) check.feasible = false;
    for (Label k = 1; k <= static_cast<Label>(n) && check.feasible; ++k) {
      if (d.delta(static_cast<EdgeId>(e), k) < 0) check.feasible = false;
      if (d.gamma[e] - d.delta(static_cast<EdgeId>(e), k) > k) check.feasible = false;
    }
  }
  for (NodeId i = 0; i < static_cast<NodeId>(n) && check.feasible; ++i) {
    for (Label k = 1; k <= static_cast<Label>(n); ++k) {
      Objective lhs = -d.alpha[static_cast<std::size_t>(k - 1)] + d.beta[static_cast<std::size_t>(i)];
      for (const Incidence& inc : g.neighbors(i)) lhs += d.delta(inc.edge, k);
      if (lhs > 0) {
        check.feasible = false;
        break;
      }
    }
  }

  Objective obj = 0;
  for (auto a : d.alpha) obj -= a;
  for (auto b : d.beta) obj += b;
  for (auto c : d.gamma) obj += c;
  check.objective = obj;
  return check;
}

}  // namespace slab
