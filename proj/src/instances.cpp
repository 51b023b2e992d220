#include "slab/instances.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <queue>
#include <string>
#include <unordered_set>

#include "slab/error.hpp"
#include "slab/rng.hpp"

namespace slab {

namespace {

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

void require_probability(double p, const char* name) {
  require(p >= 0.0 && p <= 1.0, std::string(name) + " must lie in [0,1]");
}

constexpr std::int64_t kMaxGeneratedNodes = 50'000'000;

struct CaterpillarParts {
  EdgeList edges;
  NodeId nodes = 0;
  std::vector<NodeId> leaves;
};

CaterpillarParts caterpillar_parts(std::int32_t expected_backbone, double p1, Rng& rng) {
  require(expected_backbone >= 1, "expected backbone length must be >= 1");
  require_probability(p1, "p1");
  const double stop = 1.0 / (1.0 + static_cast<double>(expected_backbone));
  const std::int64_t cap = 4LL * expected_backbone;
  std::int64_t failures = 0;
  while (failures < cap && !(rng.uniform() < stop)) ++failures;
  const auto length = static_cast<NodeId>(std::clamp<std::int64_t>(failures, 1, cap));

  CaterpillarParts parts;
  parts.nodes = length;
  for (NodeId i = 0; i + 1 < length; ++i) parts.edges.emplace_back(i, i + 1);
  for (NodeId i = 0; i < length; ++i) {
    if (rng.uniform() < p1) {
      parts.edges.emplace_back(i, parts.nodes);
      parts.leaves.push_back(parts.nodes);
      ++parts.nodes;
    }
  }
  return parts;
}

}  // namespace

Graph gen_path(NodeId n) {
  require(n >= 2, "path needs n >= 2");
  EdgeList edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

Graph gen_cycle(NodeId n) {
  require(n >= 3, "cycle needs n >= 3");
  EdgeList edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return build_graph(n, edges);
}

Graph gen_grid(std::int32_t rows, std::int32_t cols) {
  require(rows >= 2 && cols >= 2, "grid needs rows, cols >= 2");
  require(static_cast<std::int64_t>(rows) * cols <= kMaxGeneratedNodes, "grid too large");
  EdgeList edges;
  for (std::int32_t r = 0; r < rows; ++r) {
    for (std::int32_t c = 0; c < cols; ++c) {
      const NodeId v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return build_graph(rows * cols, edges);
}

PerfectNaryTree gen_perfect_nary(std::int32_t arity, std::int32_t depth) {
  require(arity >= 1, "arity must be >= 1");
  require(depth >= 0, "depth must be >= 0");
  std::int64_t total = 1;
  std::int64_t level = 1;
  for (std::int32_t d = 1; d <= depth; ++d) {
    level *= arity;
    total += level;
    require(total <= kMaxGeneratedNodes, "perfect n-ary tree too large");
  }

  PerfectNaryTree tree;
  tree.arity = arity;
  tree.height = depth;
  tree.depth.assign(static_cast<std::size_t>(total), 0);
  EdgeList edges;
  NodeId next = 1;
  for (NodeId v = 0; v < static_cast<NodeId>(total); ++v) {
    if (tree.depth[static_cast<std::size_t>(v)] == depth) continue;
    for (std::int32_t c = 0; c < arity; ++c) {
      tree.depth[static_cast<std::size_t>(next)] = tree.depth[static_cast<std::size_t>(v)] + 1;
      edges.emplace_back(v, next++);
    }
  }
  tree.graph = build_graph(static_cast<NodeId>(total), edges);
  return tree;
}

Graph gen_gnm(NodeId n, std::int64_t m, std::uint64_t seed) {
  require(n >= 1, "gnm needs n >= 1");
  require(m >= 0, "gnm needs m >= 0");
  const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
  require(m <= max_edges, "gnm: m = " + std::to_string(m) + " exceeds n(n-1)/2 = " +
                              std::to_string(max_edges));
  Rng rng(seed);
  std::unordered_set<std::uint64_t> present;
  EdgeList edges;
  const auto un = static_cast<std::uint64_t>(n);
  while (static_cast<std::int64_t>(edges.size()) < m) {
    auto u = static_cast<NodeId>(rng.below(un));
    auto v = static_cast<NodeId>(rng.below(un));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    const std::uint64_t key = static_cast<std::uint64_t>(u) * un + static_cast<std::uint64_t>(v);
    if (!present.insert(key).second) continue;
    edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

Graph gen_random_tree(NodeId n, std::uint64_t seed) {
  require(n >= 1, "tree needs n >= 1");
  if (n == 1) return build_graph(1, EdgeList{});
  if (n == 2) return build_graph(2, EdgeList{{0, 1}});

  Rng rng(seed);
  std::vector<NodeId> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = static_cast<NodeId>(rng.below(static_cast<std::uint64_t>(n)));

  std::vector<std::int32_t> remaining(static_cast<std::size_t>(n), 1);
  for (NodeId c : code) ++remaining[static_cast<std::size_t>(c)];
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> leaves;
  for (NodeId i = 0; i < n; ++i) {
    if (remaining[static_cast<std::size_t>(i)] == 1) leaves.push(i);
  }
  EdgeList edges;
  for (NodeId c : code) {
    const NodeId leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--remaining[static_cast<std::size_t>(c)] == 1) leaves.push(c);
  }
  const NodeId a = leaves.top();
  leaves.pop();
  const NodeId b = leaves.top();
  edges.emplace_back(a, b);
  return build_graph(n, edges);
}

Graph gen_caterpillar(std::int32_t expected_backbone, double p1, std::uint64_t seed) {
  Rng rng(seed);
  auto parts = caterpillar_parts(expected_backbone, p1, rng);
  return build_graph(parts.nodes, parts.edges);
}

Graph gen_lobster(std::int32_t expected_backbone, double p1, double p2, std::uint64_t seed) {
  require_probability(p2, "p2");
  Rng rng(seed);
  auto parts = caterpillar_parts(expected_backbone, p1, rng);
  for (NodeId leaf : parts.leaves) {
    if (rng.uniform() < p2) {
      parts.edges.emplace_back(leaf, parts.nodes);
      ++parts.nodes;
    }
  }
  return build_graph(parts.nodes, parts.edges);
}

Graph gen_bipartite(NodeId n1, NodeId n2, double p, std::uint64_t seed) {
  require(n1 >= 1 && n2 >= 1, "bipartite parts need >= 1 node each");
  require_probability(p, "p");
  require(static_cast<std::int64_t>(n1) + n2 <= kMaxGeneratedNodes, "bipartite graph too large");
  Rng rng(seed);
  EdgeList edges;
  for (NodeId i = 0; i < n1; ++i) {
    for (NodeId j = 0; j < n2; ++j) {
      if (rng.uniform() < p) edges.emplace_back(i, n1 + j);
    }
  }
  return build_graph(n1 + n2, edges);
}

namespace {

constexpr std::array<std::pair<InstanceKind, std::string_view>, 9> kKindNames{{
    {InstanceKind::Path, "path"},
    {InstanceKind::Cycle, "cycle"},
    {InstanceKind::Nary, "nary"},
    {InstanceKind::Grid, "grid"},
    {InstanceKind::Gnm, "gnm"},
    {InstanceKind::Tree, "tree"},
    {InstanceKind::Caterpillar, "caterpillar"},
    {InstanceKind::Lobster, "lobster"},
    {InstanceKind::Bipartite, "bipartite"},
}};

std::string fmt_prob(double p) {
  std::string s = std::to_string(p);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string_view kind_name(InstanceKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<InstanceKind> parse_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

Graph generate(const InstanceSpec& spec) {
  switch (spec.kind) {
    case InstanceKind::Path: return gen_path(spec.nodes);
    case InstanceKind::Cycle: return gen_cycle(spec.nodes);
    case InstanceKind::Nary: return gen_perfect_nary(spec.arity, spec.depth).graph;
    case InstanceKind::Grid: return gen_grid(spec.rows, spec.cols);
    case InstanceKind::Gnm: return gen_gnm(spec.nodes, spec.edges, spec.seed);
    case InstanceKind::Tree: return gen_random_tree(spec.nodes, spec.seed);
    case InstanceKind::Caterpillar: return gen_caterpillar(spec.backbone, spec.p1, spec.seed);
    case InstanceKind::Lobster: return gen_lobster(spec.backbone, spec.p1, spec.p2, spec.seed);
    case InstanceKind::Bipartite: return gen_bipartite(spec.n1, spec.n2, spec.p, spec.seed);
  }
  throw ParameterError("unknown instance kind");
}

std::vector<InstanceSpec> standard_suite() {
  std::vector<InstanceSpec> suite;
  auto add = [&](InstanceSpec s) { suite.push_back(std::move(s)); };

  for (std::int32_t k = 3; k <= 12; ++k) {
    add({.kind = InstanceKind::Grid, .name = "gridgraph" + std::to_string(k), .rows = k, .cols = k});
  }
  std::uint64_t seed = 1;
  for (NodeId half : {5, 10, 15, 20, 25}) {
    for (double p : {0.25, 0.5}) {
      add({.kind = InstanceKind::Bipartite,
           .name = "bipartite" + std::to_string(half) + "-" + std::to_string(half) + "-" + fmt_prob(p),
           .n1 = half, .n2 = half, .p = p, .seed = seed++});
    }
  }
  for (std::int32_t b : {10, 20, 30, 40, 50}) {
    for (double p : {0.25, 0.5}) {
      add({.kind = InstanceKind::Caterpillar,
           .name = "caterpillar" + std::to_string(b) + "-" + fmt_prob(p),
           .backbone = b, .p1 = p, .seed = seed++});
    }
  }
  for (std::int32_t b : {10, 20, 30, 40, 50}) {
    for (double p : {0.25, 0.5}) {
      add({.kind = InstanceKind::Lobster,
           .name = "lobster" + std::to_string(b) + "-" + fmt_prob(p) + "-" + fmt_prob(p),
           .backbone = b, .p1 = p, .p2 = p, .seed = seed++});
    }
  }
  for (NodeId n : {10, 15, 20, 25, 30, 35, 40, 50, 75, 100}) {
    add({.kind = InstanceKind::Tree, .name = "tree" + std::to_string(n), .nodes = n, .seed = seed++});
  }
  for (auto [n, m] : {std::pair<NodeId, std::int64_t>{50, 100}, {50, 150}, {50, 200},
                      {500, 1000}, {500, 1500}, {500, 2000}}) {
    for (int r = 1; r <= 5; ++r) {
      add({.kind = InstanceKind::Gnm,
           .name = "random" + std::to_string(n) + "-" + std::to_string(m) + "-" + std::to_string(r),
           .nodes = n, .edges = m, .seed = seed++});
    }
  }
  for (NodeId n : {5, 10, 20, 50, 100}) {
    add({.kind = InstanceKind::Path, .name = "path" + std::to_string(n), .nodes = n});
    add({.kind = InstanceKind::Cycle, .name = "cycle" + std::to_string(n), .nodes = n});
  }
  for (std::int32_t a = 1; a <= 3; ++a) {
    for (std::int32_t d = 1; d <= 4; ++d) {
      add({.kind = InstanceKind::Nary,
           .name = "nary" + std::to_string(a) + "-" + std::to_string(d), .arity = a, .depth = d});
    }
  }
  return suite;
}

}  // namespace slab
