#pragma once

// Independent reference implementations used only by tests. None of them call
// into the solver code beyond the Graph accessors.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "slab/graph.hpp"
#include "slab/instances.hpp"
#include "slab/rng.hpp"

namespace oracle {

/// Sum over edges of the smaller endpoint label; labels[i] is node i's label.
inline std::int64_t sl(const slab::Graph& g, const std::vector<std::int32_t>& labels) {
  std::int64_t total = 0;
  for (const auto& e : g.edges()) total += std::min(labels[static_cast<std::size_t>(e.u)], labels[static_cast<std::size_t>(e.v)]);
  return total;
}

struct Optimum {
  std::int64_t value = 0;
  std::vector<std::int32_t> labels;
  std::int64_t count = 0;  // number of optimal labelings
};

/// Enumerates all |V|! labelings. Keep |V| <= 10.
inline Optimum optimum(const slab::Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_nodes());
  std::vector<std::int32_t> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  Optimum best;
  best.value = std::numeric_limits<std::int64_t>::max();
  do {
    const auto v = sl(g, labels);
    if (v < best.value) {
      best.value = v;
      best.labels = labels;
      best.count = 1;
    } else if (v == best.value) {
      ++best.count;
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  return best;
}

/// Minimum over all permutations of sum_i c[i][perm[i]].
inline std::int64_t assignment(const std::vector<std::vector<std::int64_t>>& c) {
  std::vector<std::size_t> perm(c.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < c.size(); ++i) total += c[i][perm[i]];
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Minimum objective over completions of a label prefix (prefix[k-1] gets label k).
inline std::int64_t best_completion(const slab::Graph& g, const std::vector<slab::NodeId>& prefix) {
  const auto n = static_cast<std::size_t>(g.num_nodes());
  std::vector<std::int32_t> labels(n, 0);
  for (std::size_t k = 0; k < prefix.size(); ++k) labels[static_cast<std::size_t>(prefix[k])] = static_cast<std::int32_t>(k + 1);
  std::vector<std::size_t> free_nodes;
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] == 0) free_nodes.push_back(i);
  }
  std::vector<std::int32_t> rest(free_nodes.size());
  std::iota(rest.begin(), rest.end(), static_cast<std::int32_t>(prefix.size() + 1));
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    for (std::size_t j = 0; j < free_nodes.size(); ++j) labels[free_nodes[j]] = rest[j];
    best = std::min(best, sl(g, labels));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

/// Small random graph from one of the generator families, |V| <= max_nodes.
inline slab::Graph random_small(slab::Rng& rng, slab::NodeId max_nodes) {
  using namespace slab;
  const auto n = static_cast<NodeId>(2 + rng.below(static_cast<std::uint64_t>(max_nodes - 1)));
  switch (rng.below(7)) {
    case 0: return gen_path(n);
    case 1: return gen_cycle(std::max<NodeId>(3, n));
    case 2: return gen_random_tree(n, rng.next());
    case 3: {
      const std::int64_t cap = static_cast<std::int64_t>(n) * (n - 1) / 2;
      return gen_gnm(n, 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(cap))), rng.next());
    }
    case 4: {
      const auto n1 = static_cast<NodeId>(1 + rng.below(static_cast<std::uint64_t>(std::max<NodeId>(1, n / 2))));
      return gen_bipartite(n1, std::max<NodeId>(1, n - n1), 0.6, rng.next());
    }
    case 5: {
      for (;;) {
        auto g = gen_caterpillar(3, 0.5, rng.next());
        if (g.num_nodes() <= max_nodes) return g;
      }
    }
    default: {
      for (;;) {
        auto g = gen_lobster(2, 0.5, 0.5, rng.next());
        if (g.num_nodes() <= max_nodes) return g;
      }
    }
  }
}

}  // namespace oracle
