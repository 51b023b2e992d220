#include "slab/exact.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "slab/dual_ascent.hpp"
#include "slab/error.hpp"
#include "slab/heuristics.hpp"

namespace slab {

namespace {

struct PrefixState {
  std::vector<char> labeled;
  std::vector<std::int32_t> residual_degree;
  Objective fixed = 0;
  std::int64_t residual_edges = 0;
};

PrefixState prefix_state(const Graph& g, std::span<const NodeId> partial) {
  const auto n = static_cast<std::size_t>(g.num_nodes());
  if (partial.size() > n) throw LabelingError("prefix longer than the node count");
  PrefixState s;
  s.labeled.assign(n, 0);
  s.residual_degree.resize(n);
  for (NodeId i = 0; i < g.num_nodes(); ++i) s.residual_degree[static_cast<std::size_t>(i)] = g.degree(i);
  s.residual_edges = g.num_edges();
  Label k = 0;
  for (NodeId v : partial) {
    ++k;
    if (v < 0 || v >= g.num_nodes()) throw LabelingError("prefix node " + std::to_string(v) + " out of range");
    if (s.labeled[static_cast<std::size_t>(v)]) throw LabelingError("prefix repeats node " + std::to_string(v));
    s.labeled[static_cast<std::size_t>(v)] = 1;
    for (const Incidence& inc : g.neighbors(v)) {
      if (s.labeled[static_cast<std::size_t>(inc.neighbor)]) continue;
      s.fixed += k;
      --s.residual_edges;
      --s.residual_degree[static_cast<std::size_t>(inc.neighbor)];
    }
    s.residual_degree[static_cast<std::size_t>(v)] = 0;
  }
  return s;
}

/// Prefix followed by the unlabeled nodes in index order.
Labeling complete_in_index_order(std::span<const NodeId> partial, const std::vector<char>& labeled) {
  std::vector<NodeId> order(partial.begin(), partial.end());
  for (std::size_t i = 0; i < labeled.size(); ++i) {
    if (!labeled[i]) order.push_back(static_cast<NodeId>(i));
  }
  return Labeling::from_order(order);
}

std::vector<NodeId> residual_nodes(const PrefixState& s) {
  std::vector<NodeId> keep;
  for (std::size_t i = 0; i < s.labeled.size(); ++i) {
    if (!s.labeled[i] && s.residual_degree[i] > 0) keep.push_back(static_cast<NodeId>(i));
  }
  return keep;
}

// ---------------------------------------------------------------------------
// Brute force

class BruteForce {
 public:
  explicit BruteForce(const Graph& g) : g_(g) {
    const auto n = static_cast<std::size_t>(g.num_nodes());
    labeled_.assign(n, 0);
    degree_.resize(n);
    for (NodeId i = 0; i < g.num_nodes(); ++i) degree_[static_cast<std::size_t>(i)] = g.degree(i);
    best_labeling_ = Labeling::identity(g.num_nodes());
    best_ = sl_value(g, best_labeling_);
    scratch_.reserve(n);
  }

  void run() { dfs(0, 0, g_.num_edges()); }

  Objective best() const noexcept { return best_; }
  const Labeling& best_labeling() const noexcept { return best_labeling_; }

 private:
  /// Residual edges must be covered by labels k+1, k+2, ...; the node with the
  /// j-th next label covers at most its residual degree of them.
  Objective capacity_bound(Label k, std::int64_t remaining) {
    scratch_.clear();
    for (std::size_t i = 0; i < degree_.size(); ++i) {
      if (!labeled_[i] && degree_[i] > 0) scratch_.push_back(degree_[i]);
    }
    std::sort(scratch_.begin(), scratch_.end(), std::greater<>());
    Objective extra = 0;
    Objective j = 0;
    for (auto d : scratch_) {
      if (remaining == 0) break;
      ++j;
      const auto c = std::min<std::int64_t>(d, remaining);
      extra += (k + j) * c;
      remaining -= c;
    }
    return extra;
  }

  void dfs(Label k, Objective fixed, std::int64_t remaining) {
    if (remaining == 0) {
      if (fixed < best_) {
        best_ = fixed;
        best_labeling_ = complete_in_index_order(order_, labeled_);
      }
      return;
    }
    if (fixed + capacity_bound(k, remaining) >= best_) return;
    const Label next = k + 1;
    for (NodeId v = 0; v < g_.num_nodes(); ++v) {
      if (labeled_[static_cast<std::size_t>(v)]) continue;
      const auto dv = degree_[static_cast<std::size_t>(v)];
      labeled_[static_cast<std::size_t>(v)] = 1;
      degree_[static_cast<std::size_t>(v)] = 0;
      for (const Incidence& inc : g_.neighbors(v)) {
        if (!labeled_[static_cast<std::size_t>(inc.neighbor)]) --degree_[static_cast<std::size_t>(inc.neighbor)];
      }
      order_.push_back(v);
      dfs(next, fixed + static_cast<Objective>(next) * dv, remaining - dv);
      order_.pop_back();
      for (const Incidence& inc : g_.neighbors(v)) {
        if (!labeled_[static_cast<std::size_t>(inc.neighbor)]) ++degree_[static_cast<std::size_t>(inc.neighbor)];
      }
      degree_[static_cast<std::size_t>(v)] = dv;
      labeled_[static_cast<std::size_t>(v)] = 0;
    }
  }

  const Graph& g_;
  std::vector<char> labeled_;
  std::vector<std::int32_t> degree_;
  std::vector<NodeId> order_;
  std::vector<std::int32_t> scratch_;
  Objective best_ = 0;
  Labeling best_labeling_;
};

// ---------------------------------------------------------------------------
// Branch and bound

using EdgeKey = std::vector<std::uint64_t>;

struct KeyHash {
  std::size_t operator()(const EdgeKey& key) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (auto w : key) {
      h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

class BoundCache {
 public:
  static constexpr std::size_t kMaxEntries = 1'000'000;

  BoundCache(const Graph& g, bool enabled) : g_(g), enabled_(enabled) {}

  /// Extended dual-ascent value of the residual left by `s`.
  Objective residual_dual(const PrefixState& s, std::int64_t& hits) {
    if (s.residual_edges == 0) return 0;
    EdgeKey key;
    if (enabled_) {
      key.assign((static_cast<std::size_t>(g_.num_edges()) + 63) / 64, 0);
      for (EdgeId e = 0; e < g_.num_edges(); ++e) {
        const Edge& ed = g_.edge(e);
        if (!s.labeled[static_cast<std::size_t>(ed.u)] && !s.labeled[static_cast<std::size_t>(ed.v)]) {
          key[static_cast<std::size_t>(e) / 64] |= std::uint64_t{1} << (static_cast<std::size_t>(e) % 64);
        }
      }
      if (auto it = cache_.find(key); it != cache_.end()) {
        ++hits;
        return it->second;
      }
    }
    const auto keep = residual_nodes(s);
    const Objective value = dual_ascent_extended(induced_subgraph(g_, keep)).bound();
    if (enabled_) {
      if (cache_.size() >= kMaxEntries) cache_.clear();
      cache_.emplace(std::move(key), value);
    }
    return value;
  }

 private:
  const Graph& g_;
  bool enabled_;
  std::unordered_map<EdgeKey, Objective, KeyHash> cache_;
};

struct OpenNode {
  Objective lb;
  std::int32_t depth;
  std::uint64_t seq;
  Objective fixed;
  std::vector<NodeId> partial;
};

/// Lowest lb first, then deeper, then older.
struct OpenOrder {
  bool operator()(const OpenNode& a, const OpenNode& b) const noexcept {
    if (a.lb != b.lb) return a.lb > b.lb;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.seq > b.seq;
  }
};

}  // namespace

BruteForceResult brute_force(const Graph& g, NodeId node_limit) {
  if (g.num_nodes() > node_limit) {
    throw SizeLimitError("brute force refuses " + std::to_string(g.num_nodes()) + " nodes (limit " +
                         std::to_string(node_limit) + ")");
  }
  BruteForce search(g);
  search.run();
  return {search.best(), search.best_labeling()};
}

Graph residual_graph(const Graph& g, std::span<const NodeId> partial) {
  const auto s = prefix_state(g, partial);
  return induced_subgraph(g, residual_nodes(s));
}

BnBNode make_bnb_node(const Graph& g, std::span<const NodeId> partial) {
  BnBNode node;
  node.partial.assign(partial.begin(), partial.end());
  node.fixed_cost = prefix_state(g, partial).fixed;
  node.lb = residual_bound(g, node);
  return node;
}

Objective residual_bound(const Graph& g, const BnBNode& node) {
  const auto s = prefix_state(g, node.partial);
  if (s.residual_edges == 0) return s.fixed;
  const auto k = static_cast<Objective>(node.partial.size());
  const Objective dual = dual_ascent_extended(induced_subgraph(g, residual_nodes(s))).bound();
  return s.fixed + k * s.residual_edges + dual;
}

BnBResult branch_and_bound(const Graph& g, const BnBOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  auto elapsed_s = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  BnBResult result;
  SearchStats& stats = result.stats;
  auto finish = [&](Objective lb) {
    result.lb = std::min(lb, result.ub);
    stats.lb = result.lb;
    stats.ub = result.ub;
    stats.proven_optimal = result.lb == result.ub;
    stats.time_ms = elapsed_s() * 1000.0;
    return result;
  };

  if (g.num_edges() == 0) {
    result.labeling = Labeling::identity(g.num_nodes());
    result.ub = 0;
    return finish(0);
  }

  const NodeId n = g.num_nodes();
  auto root_incumbent = starting_heuristic(g, options.incumbent_seed);
  result.labeling = std::move(root_incumbent.labeling);
  result.ub = root_incumbent.value;

  BoundCache cache(g, options.memoize_bounds);
  const Objective root_lb = dual_ascent_extended(g).bound();
  if (root_lb >= result.ub) return finish(root_lb);

  std::priority_queue<OpenNode, std::vector<OpenNode>, OpenOrder> open;
  std::uint64_t seq = 0;
  open.push({root_lb, 0, seq++, 0, {}});

  // Label sets already reached, with the smallest fixed cost seen.
  std::unordered_map<EdgeKey, Objective, KeyHash> seen_sets;
  auto set_key = [&](const std::vector<char>& labeled) {
    EdgeKey key((static_cast<std::size_t>(n) + 63) / 64, 0);
    for (std::size_t i = 0; i < labeled.size(); ++i) {
      if (labeled[i]) key[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return key;
  };

  bool stopped = false;
  while (!open.empty()) {
    if ((options.time_limit_s && elapsed_s() > *options.time_limit_s) ||
        (options.node_limit && stats.explored >= *options.node_limit) ||
        static_cast<std::int64_t>(open.size()) > options.max_open_nodes) {
      stopped = true;
      break;
    }
    OpenNode node = open.top();
    open.pop();
    if (node.lb >= result.ub) {
      ++stats.pruned;
      continue;
    }
    ++stats.explored;

    if (options.greedy_completion) {
      Labeling completion = greedy_completion(g, node.partial);
      const Objective value = sl_value(g, completion);
      if (value < result.ub) {
        result.ub = value;
        result.labeling = std::move(completion);
      }
      if (node.lb >= result.ub) continue;
    }

    const auto parent = prefix_state(g, node.partial);
    const Label next = node.depth + 1;
    for (NodeId v = 0; v < n; ++v) {
      const auto dv = parent.residual_degree[static_cast<std::size_t>(v)];
      if (parent.labeled[static_cast<std::size_t>(v)] || dv == 0) continue;
      if (options.time_limit_s && elapsed_s() > *options.time_limit_s) {
        // Keep the half-expanded node open so its bound stays in the bracket.
        open.push(std::move(node));
        stopped = true;
        break;
      }

      std::vector<NodeId> partial = node.partial;
      partial.push_back(v);
      const Objective fixed = node.fixed + static_cast<Objective>(next) * dv;
      if (parent.residual_edges == dv) {
        // Residual becomes edgeless: every contribution is fixed.
        if (fixed < result.ub) {
          result.ub = fixed;
          auto labeled = parent.labeled;
          labeled[static_cast<std::size_t>(v)] = 1;
          result.labeling = complete_in_index_order(partial, labeled);
        }
        continue;
      }
      const auto child = prefix_state(g, partial);
      if (options.experimental_dominance) {
        auto key = set_key(child.labeled);
        auto [it, inserted] = seen_sets.try_emplace(std::move(key), fixed);
        if (!inserted) {
          if (fixed >= it->second) {
            ++stats.pruned;
            continue;
          }
          it->second = fixed;
        }
      }
      const Objective lb = fixed + static_cast<Objective>(next) * child.residual_edges +
                           cache.residual_dual(child, stats.memo_hits);
      if (lb >= result.ub) {
        ++stats.pruned;
        continue;
      }
      open.push({lb, next, seq++, fixed, std::move(partial)});
    }
    if (stopped) break;
  }

  Objective lb = result.ub;
  if (stopped && !open.empty()) lb = std::max(root_lb, open.top().lb);
  return finish(lb);
}

}  // namespace slab
