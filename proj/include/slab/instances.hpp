#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slab/graph.hpp"

namespace slab {

// Deterministic generators. Every random draw comes from Rng (SplitMix64)
// seeded with the caller's seed, consumed in the order documented per function.

Graph gen_path(NodeId n);                    // n >= 2, edges (i,i+1)
Graph gen_cycle(NodeId n);                   // n >= 3, path edges then (0,n-1)
Graph gen_grid(std::int32_t rows, std::int32_t cols);  // row-major; per node: right, then down

struct PerfectNaryTree {
  Graph graph;
  std::vector<std::int32_t> depth;  // per node; node 0 is the root
  std::int32_t arity = 0;
  std::int32_t height = 0;
};

/// Breadth-first numbering: children of node v are contiguous, root = 0.
PerfectNaryTree gen_perfect_nary(std::int32_t arity, std::int32_t depth);

/// Rejection sampling: u = next() mod n, v = next() mod n; skip loops and repeats.
Graph gen_gnm(NodeId n, std::int64_t m, std::uint64_t seed);

/// Uniform labelled tree: Prüfer sequence entries next() mod n, decoded smallest-leaf first.
Graph gen_random_tree(NodeId n, std::uint64_t seed);

/// Backbone length L = failures before the first success of uniform() < 1/(1+expected),
/// clamped to [1, 4*expected]; then per backbone node one leaf with probability p1.
Graph gen_caterpillar(std::int32_t expected_backbone, double p1, std::uint64_t seed);

/// gen_caterpillar's draws, followed by one second-level leaf per first-level leaf
/// with probability p2. With p2 = 0 the result equals gen_caterpillar for the same seed.
Graph gen_lobster(std::int32_t expected_backbone, double p1, double p2, std::uint64_t seed);

/// Parts 0..n1-1 and n1..n1+n2-1; cross pairs row-major, each kept when uniform() < p.
Graph gen_bipartite(NodeId n1, NodeId n2, double p, std::uint64_t seed);

enum class InstanceKind { Path, Cycle, Nary, Grid, Gnm, Tree, Caterpillar, Lobster, Bipartite };

std::string_view kind_name(InstanceKind kind);
std::optional<InstanceKind> parse_kind(std::string_view text);

struct InstanceSpec {
  InstanceKind kind = InstanceKind::Path;
  std::string name;
  NodeId nodes = 0;           // path, cycle, gnm, tree
  std::int64_t edges = 0;     // gnm
  std::int32_t arity = 0;     // nary
  std::int32_t depth = 0;     // nary
  std::int32_t rows = 0;      // grid
  std::int32_t cols = 0;      // grid
  std::int32_t backbone = 0;  // caterpillar, lobster
  double p1 = 0.0;            // caterpillar, lobster
  double p2 = 0.0;            // lobster
  NodeId n1 = 0;              // bipartite
  NodeId n2 = 0;              // bipartite
  double p = 0.0;             // bipartite
  std::uint64_t seed = 0;
};

Graph generate(const InstanceSpec& spec);

/// Desk-scale benchmark families: grids 3..12, bipartite, caterpillars, lobsters,
/// random trees, G(n,m) at 50 and 500 nodes, plus paths, cycles and perfect n-ary trees.
std::vector<InstanceSpec> standard_suite();

}  // namespace slab
