#include <doctest.h>

#include "oracles.hpp"
#include "slab/dual_ascent.hpp"
#include "slab/error.hpp"
#include "slab/exact.hpp"
#include "slab/instances.hpp"

using namespace slab;

TEST_SUITE("exact") {
  TEST_CASE("brute force examples") {
    const auto grid = brute_force(gen_grid(3, 3));
    CHECK(grid.value == 30);
    CHECK(sl_value(gen_grid(3, 3), grid.labeling) == 30);
    CHECK(brute_force(gen_cycle(5)).value == 9);
    CHECK(brute_force(gen_path(2)).value == 1);
    CHECK(brute_force(build_graph(4, std::vector<std::pair<NodeId, NodeId>>{})).value == 0);
    CHECK_THROWS_AS(brute_force(gen_path(13)), SizeLimitError);
    CHECK(brute_force(gen_path(13), 13).value == 42);  // (13-1)^2/4 + (13-1)/2
  }

  TEST_CASE("brute force agrees with enumeration") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
      const Graph g = oracle::random_small(rng, 8);
      const auto bf = brute_force(g);
      CHECK(bf.value == oracle::optimum(g).value);
      CHECK(sl_value(g, bf.labeling) == bf.value);
    }
  }

  TEST_CASE("residual bound examples") {
    const Graph grid = gen_grid(3, 3);
    CHECK(make_bnb_node(grid, {}).lb == 27);
    const std::vector<NodeId> all{4, 1, 3, 5, 7, 0, 2, 6, 8};
    const auto full = make_bnb_node(grid, all);
    CHECK(full.lb == sl_value(grid, Labeling::from_order(all)));
    const std::vector<NodeId> centre{1};
    const auto p3 = make_bnb_node(gen_path(3), centre);
    CHECK(p3.fixed_cost == 2);
    CHECK(p3.lb == 2);
    CHECK(residual_graph(gen_path(3), centre).num_edges() == 0);
    CHECK_THROWS_AS(make_bnb_node(gen_path(3), std::vector<NodeId>{0, 0}), LabelingError);
  }

  TEST_CASE("fixed cost of a prefix") {
    // Labels 1 and 2 on the grid corners 0 and 2: each covers two edges.
    const auto node = make_bnb_node(gen_grid(3, 3), std::vector<NodeId>{0, 2});
    CHECK(node.fixed_cost == 1 * 2 + 2 * 2);
    CHECK(node.lb >= node.fixed_cost);
  }

  TEST_CASE("bound admissibility on sampled prefixes") {
    Rng rng(13);
    for (int trial = 0; trial < 120; ++trial) {
      const Graph g = oracle::random_small(rng, 9);
      const NodeId n = g.num_nodes();
      std::vector<NodeId> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
      order.resize(rng.below(static_cast<std::uint64_t>(n)));
      const auto node = make_bnb_node(g, order);
      CHECK(node.lb <= oracle::best_completion(g, order));
    }
  }

  TEST_CASE("closure order does not matter once the residual is edgeless") {
    Rng rng(19);
    for (int trial = 0; trial < 50; ++trial) {
      const Graph g = oracle::random_small(rng, 10);
      const auto bf = brute_force(g);
      // Cover every edge with the optimal prefix, then permute the tail both ways.
      std::vector<NodeId> order(static_cast<std::size_t>(g.num_nodes()));
      for (NodeId i = 0; i < g.num_nodes(); ++i) order[static_cast<std::size_t>(bf.labeling.label(i) - 1)] = i;
      std::size_t cut = 0;
      while (residual_graph(g, std::span<const NodeId>(order.data(), cut)).num_edges() > 0) ++cut;
      auto forward = order;
      auto backward = order;
      std::sort(forward.begin() + static_cast<std::ptrdiff_t>(cut), forward.end());
      std::sort(backward.begin() + static_cast<std::ptrdiff_t>(cut), backward.end(), std::greater<>());
      CHECK(sl_value(g, Labeling::from_order(forward)) == sl_value(g, Labeling::from_order(backward)));
    }
  }

  TEST_CASE("branch and bound examples") {
    const auto grid = branch_and_bound(gen_grid(3, 3));
    CHECK(grid.lb == 30);
    CHECK(grid.ub == 30);
    CHECK(grid.stats.proven_optimal);
    CHECK(sl_value(gen_grid(3, 3), grid.labeling) == 30);
    const auto tree = branch_and_bound(gen_perfect_nary(2, 2).graph);
    CHECK(tree.lb == 9);
    CHECK(tree.ub == 9);
    const auto c6 = branch_and_bound(gen_cycle(6));
    CHECK(c6.lb == 12);
    CHECK(c6.ub == 12);
    const auto empty = branch_and_bound(build_graph(3, std::vector<std::pair<NodeId, NodeId>>{}));
    CHECK(empty.ub == 0);
    CHECK(empty.stats.proven_optimal);
  }

  TEST_CASE("branch and bound agrees with brute force on 200 random instances") {
    Rng rng(2025);
    for (int trial = 0; trial < 200; ++trial) {
      const Graph g = oracle::random_small(rng, 10);
      const auto bf = brute_force(g);
      for (bool completion : {true, false}) {
        BnBOptions o;
        o.greedy_completion = completion;
        const auto r = branch_and_bound(g, o);
        CHECK(r.stats.proven_optimal);
        CHECK(r.ub == bf.value);
        CHECK(r.lb == bf.value);
        CHECK(sl_value(g, r.labeling) == r.ub);
      }
    }
  }

  TEST_CASE("limits return a sound bracket") {
    Rng rng(61);
    int bracketed = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const Graph g = oracle::random_small(rng, 10);
      BnBOptions o;
      o.node_limit = 1;
      o.greedy_completion = false;
      const auto r = branch_and_bound(g, o);
      const auto opt = brute_force(g).value;
      CHECK(r.lb <= opt);
      CHECK(opt <= r.ub);
      CHECK(r.stats.lb == r.lb);
      CHECK(r.stats.proven_optimal == (r.lb == r.ub));
      CHECK(sl_value(g, r.labeling) == r.ub);
      if (!r.stats.proven_optimal) ++bracketed;
    }
    CHECK(bracketed > 0);
  }

  TEST_CASE("memoisation and the experimental dominance rule keep the value") {
    Rng rng(67);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = oracle::random_small(rng, 10);
      BnBOptions plain;
      plain.memoize_bounds = false;
      BnBOptions dom;
      dom.experimental_dominance = true;
      const auto a = branch_and_bound(g, plain);
      const auto b = branch_and_bound(g, dom);
      const auto c = branch_and_bound(g);
      CHECK(a.ub == c.ub);
      CHECK(b.ub == c.ub);
      CHECK(b.stats.proven_optimal);
    }
  }
}
