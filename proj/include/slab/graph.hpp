#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace slab {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;
using Label = std::int32_t;
using Objective = std::int64_t;

struct Edge {
  NodeId u;
  NodeId v;  // u < v

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  NodeId neighbor;
  EdgeId edge;
};

/// Immutable simple undirected graph on nodes 0..n-1.
///
/// Edges keep the order in which they were supplied; each pair is stored
/// canonically with u < v. Adjacency lists are sorted by neighbor id.
class Graph {
 public:
  Graph() = default;

  NodeId num_nodes() const noexcept { return n_; }
  EdgeId num_edges() const noexcept { return static_cast<EdgeId>(edges_.size()); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

  std::span<const Incidence> neighbors(NodeId i) const {
    auto begin = offsets_[static_cast<std::size_t>(i)];
    auto end = offsets_[static_cast<std::size_t>(i) + 1];
    return {adjacency_.data() + begin, static_cast<std::size_t>(end - begin)};
  }

  std::int32_t degree(NodeId i) const {
    return offsets_[static_cast<std::size_t>(i) + 1] - offsets_[static_cast<std::size_t>(i)];
  }

  /// The other endpoint of edge `e` seen from `i`.
  NodeId opposite(EdgeId e, NodeId i) const {
    const Edge& ed = edge(e);
    return ed.u == i ? ed.v : ed.u;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

  friend Graph build_graph(NodeId n, std::span<const std::pair<NodeId, NodeId>> edge_list);

 private:
  NodeId n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> offsets_{0};
  std::vector<Incidence> adjacency_;
};

/// Builds a graph from 0-indexed pairs. Throws GraphError on out-of-range
/// endpoints, self-loops and duplicates (after canonicalisation), naming the pair.
Graph build_graph(NodeId n, std::span<const std::pair<NodeId, NodeId>> edge_list);

inline Graph build_graph(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edge_list) {
  return build_graph(n, std::span<const std::pair<NodeId, NodeId>>(edge_list));
}

std::int32_t max_degree(const Graph& g);

struct Triangle {
  std::array<NodeId, 3> nodes;  // a < b < c
  std::array<EdgeId, 3> edges;  // (a,b), (a,c), (b,c)
};

/// Every triangle exactly once, in lexicographic order of sorted node triples.
std::vector<Triangle> enumerate_triangles(const Graph& g);

/// Induced subgraph on `keep` (strictly increasing node ids), relabelled 0..k-1.
Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep);

bool is_connected(const Graph& g);

}  // namespace slab
