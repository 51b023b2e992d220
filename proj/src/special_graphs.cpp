#include "slab/special_graphs.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "slab/error.hpp"
#include "slab/instances.hpp"

namespace slab {

std::string_view structure_name(StructureKind kind) {
  switch (kind) {
    case StructureKind::Path: return "path";
    case StructureKind::Cycle: return "cycle";
    case StructureKind::PerfectNary: return "nary";
    case StructureKind::Other: return "other";
  }
  return "other";
}

namespace {

bool is_path(const Graph& g) {
  const NodeId n = g.num_nodes();
  if (n < 2 || g.num_edges() != n - 1) return false;
  for (NodeId i = 0; i < n; ++i) {
    if (g.degree(i) > 2) return false;
  }
  return is_connected(g);
}

bool is_cycle(const Graph& g) {
  const NodeId n = g.num_nodes();
  if (n < 3 || g.num_edges() != n) return false;
  for (NodeId i = 0; i < n; ++i) {
    if (g.degree(i) != 2) return false;
  }
  return is_connected(g);
}

/// BFS order and depths from `root`; depth -1 marks unreachable nodes.
void bfs(const Graph& g, NodeId root, std::vector<NodeId>& order, std::vector<std::int32_t>& depth) {
  const auto n = static_cast<std::size_t>(g.num_nodes());
  order.clear();
  order.reserve(n);
  depth.assign(n, -1);
  depth[static_cast<std::size_t>(root)] = 0;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const NodeId v = order[head];
    for (const Incidence& inc : g.neighbors(v)) {
      auto& d = depth[static_cast<std::size_t>(inc.neighbor)];
      if (d < 0) {
        d = depth[static_cast<std::size_t>(v)] + 1;
        order.push_back(inc.neighbor);
      }
    }
  }
}

/// Perfect tree test from a fixed root with every internal node having `arity` children.
bool check_perfect(const Graph& g, NodeId root, std::int32_t arity, std::int32_t& height) {
  std::vector<NodeId> order;
  std::vector<std::int32_t> depth;
  bfs(g, root, order, depth);
  if (order.size() != static_cast<std::size_t>(g.num_nodes())) return false;
  height = -1;
  for (NodeId v : order) {
    const auto dv = depth[static_cast<std::size_t>(v)];
    const std::int32_t children = g.degree(v) - (v == root ? 0 : 1);
    if (children == 0) {
      if (height < 0) height = dv;
      if (dv != height) return false;
    } else if (children != arity) {
      return false;
    }
  }
  return height >= 1;
}

/// Order of the walk along a path from its lower-indexed endpoint, or a cycle from node 0.
std::vector<NodeId> walk(const Graph& g, NodeId start) {
  const NodeId n = g.num_nodes();
  std::vector<NodeId> order;
  order.reserve(static_cast<std::size_t>(n));
  NodeId prev = -1;
  NodeId cur = start;
  while (static_cast<NodeId>(order.size()) < n) {
    order.push_back(cur);
    NodeId next = -1;
    for (const Incidence& inc : g.neighbors(cur)) {  // sorted by neighbour id
      if (inc.neighbor != prev && (order.size() < 2 || inc.neighbor != order.front())) {
        next = inc.neighbor;
        break;
      }
    }
    prev = cur;
    cur = next;
    if (cur < 0) break;
  }
  return order;
}

Labeling alternate(const std::vector<NodeId>& order) {
  const auto n = order.size();
  std::vector<Label> labels(n, 0);
  Label next = 1;
  for (std::size_t p = 1; p < n; p += 2) labels[static_cast<std::size_t>(order[p])] = next++;
  for (std::size_t p = 0; p < n; p += 2) labels[static_cast<std::size_t>(order[p])] = next++;
  return Labeling(std::move(labels));
}

}  // namespace

Structure detect_structure(const Graph& g) {
  if (is_path(g)) return {StructureKind::Path};
  if (is_cycle(g)) return {StructureKind::Cycle};

  const NodeId n = g.num_nodes();
  if (n < 3 || g.num_edges() != n - 1) return {};

  // Internal nodes of a perfect tree with arity a >= 2: the root has degree a,
  // all others degree a + 1. A star has a single internal node.
  NodeId internal = 0;
  std::int32_t lo = std::numeric_limits<std::int32_t>::max();
  std::int32_t hi = 0;
  for (NodeId i = 0; i < n; ++i) {
    const auto d = g.degree(i);
    if (d == 0) return {};
    if (d >= 2) {
      ++internal;
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  }
  NodeId root = -1;
  std::int32_t arity = 0;
  if (internal == 1) {
    arity = lo;
    for (NodeId i = 0; i < n && root < 0; ++i) {
      if (g.degree(i) >= 2) root = i;
    }
  } else {
    if (hi != lo + 1) return {};
    arity = lo;
    for (NodeId i = 0; i < n; ++i) {
      if (g.degree(i) != lo) continue;
      if (root >= 0) return {};  // two candidate roots
      root = i;
    }
  }
  if (root < 0) return {};
  std::int32_t height = 0;
  if (!check_perfect(g, root, arity, height)) return {};
  return {StructureKind::PerfectNary, arity, height, root};
}

Labeling solve_path(const Graph& g) {
  if (!is_path(g)) throw GraphError("graph is not a path");
  NodeId start = -1;
  for (NodeId i = 0; i < g.num_nodes() && start < 0; ++i) {
    if (g.degree(i) == 1) start = i;
  }
  return alternate(walk(g, start));
}

Labeling solve_cycle(const Graph& g) {
  if (!is_cycle(g)) throw GraphError("graph is not a cycle");
  return alternate(walk(g, 0));
}

NaryLabeling label_perfect_tree(const Graph& g, NodeId root, std::int32_t depth) {
  if (root < 0 || root >= g.num_nodes()) throw ParameterError("root out of range");
  if (depth < 1) throw ParameterError("tree depth must be >= 1");
  std::vector<NodeId> order;
  std::vector<std::int32_t> level;
  bfs(g, root, order, level);
  if (order.size() != static_cast<std::size_t>(g.num_nodes())) throw GraphError("tree is not connected");

  // Parity of the block that takes the smallest labels.
  const std::int32_t first_parity = depth % 2 == 1 ? 0 : 1;
  std::vector<NodeId> sequence;
  sequence.reserve(order.size());
  for (NodeId v : order) {
    if (v != root && level[static_cast<std::size_t>(v)] % 2 == first_parity) sequence.push_back(v);
  }
  sequence.push_back(root);
  for (NodeId v : order) {
    if (v != root && level[static_cast<std::size_t>(v)] % 2 != first_parity) sequence.push_back(v);
  }
  auto phi = Labeling::from_order(sequence);
  const auto value = sl_value(g, phi);
  return {std::move(phi), value};
}

NaryLabeling solve_perfect_nary(std::int32_t arity, std::int32_t depth) {
  if (arity < 1 || depth < 1) throw ParameterError("perfect n-ary tree needs arity >= 1 and depth >= 1");
  const auto tree = gen_perfect_nary(arity, depth);
  return label_perfect_tree(tree.graph, 0, depth);
}

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw ParameterError("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const auto g = std::gcd(n, d);
  num = n / g;
  den = d / g;
}

Rational operator+(const Rational& a, const Rational& b) {
  const auto g = std::gcd(a.den, b.den);
  return Rational(a.num * (b.den / g) + b.num * (a.den / g), a.den / g * b.den);
}

Objective formula_path_cycle(PathCycle kind, NodeId n_nodes) {
  const Objective v = n_nodes;
  if (kind == PathCycle::Path) {
    if (v < 2) throw ParameterError("path formula needs at least 2 nodes");
    return v % 2 == 0 ? v * v / 4 : (v - 1) * (v - 1) / 4 + (v - 1) / 2;
  }
  if (v < 3) throw ParameterError("cycle formula needs at least 3 nodes");
  return v % 2 == 0 ? v * v / 4 + v / 2 : (v + 1) * (v + 1) / 4;
}

std::int64_t perfect_nary_size(std::int32_t arity, std::int32_t depth) {
  if (arity < 1 || depth < 0) throw ParameterError("perfect n-ary tree needs arity >= 1 and depth >= 0");
  std::int64_t total = 1;
  std::int64_t level = 1;
  for (std::int32_t d = 1; d <= depth; ++d) {
    level *= arity;
    total += level;
    if (total > std::numeric_limits<NodeId>::max()) throw ParameterError("perfect n-ary tree too large");
  }
  return total;
}

FormulaValue formula_nary(std::int32_t arity, std::int32_t depth) {
  if (arity < 1 || depth < 1) throw ParameterError("formula needs arity >= 1 and depth >= 1");
  const std::int64_t a = arity;
  const std::int64_t v1 = perfect_nary_size(arity, depth) - 1;
  Rational value;
  if (depth % 2 == 1) {
    value = Rational(v1 * v1, 2 * (a + 1)) + Rational(v1, 2);
  } else {
    const std::int64_t r = v1 - a;
    value = Rational(r * r, 2 * (a + 1)) + Rational(a * r, a + 1) + Rational(v1 + a, 2);
  }
  return {value, value.is_integer()};
}

}  // namespace slab
