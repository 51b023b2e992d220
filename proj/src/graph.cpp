#include "slab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "slab/error.hpp"

namespace slab {

namespace {

std::string pair_text(NodeId u, NodeId v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph build_graph(NodeId n, std::span<const std::pair<NodeId, NodeId>> edge_list) {
  if (n < 0) throw GraphError("negative node count " + std::to_string(n));

  Graph g;
  g.n_ = n;
  g.edges_.reserve(edge_list.size());
  for (const auto& [a, b] : edge_list) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw GraphError("edge " + pair_text(a, b) + " has an endpoint outside 0.." +
                       std::to_string(n - 1));
    }
    if (a == b) throw GraphError("self-loop " + pair_text(a, b));
    g.edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }

  std::vector<EdgeId> order(g.edges_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](EdgeId x, EdgeId y) {
    const Edge& ex = g.edges_[static_cast<std::size_t>(x)];
    const Edge& ey = g.edges_[static_cast<std::size_t>(y)];
    return std::tie(ex.u, ex.v, x) < std::tie(ey.u, ey.v, y);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Edge& prev = g.edges_[static_cast<std::size_t>(order[i - 1])];
    const Edge& cur = g.edges_[static_cast<std::size_t>(order[i])];
    if (prev == cur) {
      const auto& raw = edge_list[static_cast<std::size_t>(order[i])];
      throw GraphError("duplicate edge " + pair_text(raw.first, raw.second));
    }
  }

  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[static_cast<std::size_t>(e.u) + 1];
    ++g.offsets_[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];

  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::int32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edges_[static_cast<std::size_t>(e)];
    g.adjacency_[static_cast<std::size_t>(fill[static_cast<std::size_t>(ed.u)]++)] = {ed.v, e};
    g.adjacency_[static_cast<std::size_t>(fill[static_cast<std::size_t>(ed.v)]++)] = {ed.u, e};
  }
  for (NodeId i = 0; i < n; ++i) {
    auto first = g.adjacency_.begin() + g.offsets_[static_cast<std::size_t>(i)];
    auto last = g.adjacency_.begin() + g.offsets_[static_cast<std::size_t>(i) + 1];
    std::sort(first, last, [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
  }
  return g;
}

std::int32_t max_degree(const Graph& g) {
  std::int32_t best = 0;
  for (NodeId i = 0; i < g.num_nodes(); ++i) best = std::max(best, g.degree(i));
  return best;
}

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  // mark[w] = id of edge (a,w) while scanning a, -1 otherwise
  std::vector<EdgeId> mark(static_cast<std::size_t>(g.num_nodes()), -1);
  for (NodeId a = 0; a < g.num_nodes(); ++a) {
    for (const Incidence& inc : g.neighbors(a)) mark[static_cast<std::size_t>(inc.neighbor)] = inc.edge;
    for (const Incidence& ab : g.neighbors(a)) {
      const NodeId b = ab.neighbor;
      if (b <= a) continue;
      for (const Incidence& bc : g.neighbors(b)) {
        const NodeId c = bc.neighbor;
        if (c <= b) continue;
        const EdgeId ac = mark[static_cast<std::size_t>(c)];
        if (ac < 0) continue;
        out.push_back(Triangle{{a, b, c}, {ab.edge, ac, bc.edge}});
      }
    }
    for (const Incidence& inc : g.neighbors(a)) mark[static_cast<std::size_t>(inc.neighbor)] = -1;
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep) {
  std::vector<NodeId> remap(static_cast<std::size_t>(g.num_nodes()), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) remap[static_cast<std::size_t>(keep[k])] = static_cast<NodeId>(k);
  std::vector<std::pair<NodeId, NodeId>> sub;
  for (const Edge& e : g.edges()) {
    const NodeId a = remap[static_cast<std::size_t>(e.u)];
    const NodeId b = remap[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) sub.emplace_back(a, b);
  }
  return build_graph(static_cast<NodeId>(keep.size()), sub);
}

bool is_connected(const Graph& g) {
  if (g.num_nodes() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.num_nodes()), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  NodeId reached = 1;
  while (!stack.empty()) {
    const NodeId i = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.neighbors(i)) {
      if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
        seen[static_cast<std::size_t>(inc.neighbor)] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == g.num_nodes();
}

}  // namespace slab
