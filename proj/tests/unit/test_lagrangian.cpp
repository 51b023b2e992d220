#include <doctest.h>

#include "oracles.hpp"
#include "slab/dual_ascent.hpp"
#include "slab/error.hpp"
#include "slab/instances.hpp"
#include "slab/lagrangian.hpp"

using namespace slab;

namespace {

constexpr std::int64_t S = Multipliers::kScale;

Multipliers plain(const Graph& g) { return zero_multipliers(g, false); }

}  // namespace

TEST_SUITE("lagrangian") {
  TEST_CASE("x-subproblem examples") {
    const Graph grid = gen_grid(3, 3);
    const auto zero = solve_x_subproblem(grid, plain(grid));
    CHECK(zero.value == 0);
    CHECK(zero.labeling == Labeling::identity(9));

    auto m = plain(grid);
    for (EdgeId e = 0; e < grid.num_edges(); ++e) m.set_delta(e, 1, S);
    const auto x = solve_x_subproblem(grid, m);
    CHECK(x.value == 4 * S);
    CHECK(x.labeling.label(4) == 1);

    const Graph p3 = gen_path(3);
    auto mp = plain(p3);
    mp.set_delta(0, 1, S);
    mp.set_delta(1, 1, S);
    const auto xp = solve_x_subproblem(p3, mp);
    CHECK(xp.value == 2 * S);
    CHECK(xp.labeling.label(1) == 1);
  }

  TEST_CASE("d-subproblem examples") {
    const Graph grid = gen_grid(3, 3);
    const auto d0 = solve_d_subproblem(grid, plain(grid));
    CHECK(d0.total == 12 * S);
    for (auto k : d0.chosen) CHECK(k == 1);

    const Graph p2 = gen_path(2);
    auto m = plain(p2);
    m.set_delta(0, 1, 2 * S);
    const auto d = solve_d_subproblem(p2, m);
    CHECK(d.chosen[0] == 2);
    CHECK(d.total == 2 * S);

    auto tie = plain(p2);
    tie.set_delta(0, 1, S);
    CHECK(solve_d_subproblem(p2, tie).chosen[0] == 1);
  }

  TEST_CASE("relaxation value examples") {
    const Graph grid = gen_grid(3, 3);
    CHECK(lagrangian_value(grid, plain(grid)).scaled == 12 * S);
    CHECK(lagrangian_value(gen_path(3), plain(gen_path(3))).bound == 2);
    auto m = plain(grid);
    const auto dual = dual_ascent_extended(grid);
    load_dual_deltas(m, dual.solution);
    const auto z = lagrangian_value(grid, m);
    CHECK(z.bound <= 30);
    CHECK(z.bound >= dual.bound());
  }

  TEST_CASE("any nonnegative multipliers give a valid bound") {
    Rng rng(17);
    for (int trial = 0; trial < 80; ++trial) {
      const Graph g = oracle::random_small(rng, 8);
      auto m = zero_multipliers(g, true);
      const NodeId n = g.num_nodes();
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        for (Label k = 1; k <= n; ++k) {
          if (rng.below(3) == 0) m.set_delta(e, k, static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(3 * S))));
        }
      }
      for (auto& l : m.lambda) {
        if (rng.below(3) == 0) l = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(2 * S)));
      }
      const auto z = lagrangian_value(g, m);
      CHECK(z.bound <= oracle::optimum(g).value);
    }
  }

  TEST_CASE("initial relaxation is at least the extended dual bound") {
    Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = oracle::random_small(rng, 30);
      if (g.num_edges() == 0) continue;
      for (bool tri : {false, true}) {
        auto m = zero_multipliers(g, tri);
        const auto dual = dual_ascent_extended(g);
        load_dual_deltas(m, dual.solution);
        CHECK(lagrangian_value(g, m).scaled >= dual.bound() * S);
      }
    }
  }

  TEST_CASE("subgradient examples") {
    const auto p3 = run_subgradient(gen_path(3));
    CHECK(p3.z_lb == 2);
    CHECK(p3.z_i == 2);
    CHECK(p3.stop == StopReason::Gap);

    const auto grid = run_subgradient(gen_grid(3, 3));
    for (const auto& step : grid.trace) {
      CHECK(step.z_lb <= 30);
      CHECK(step.z_i >= 30);
      CHECK(step.z_r <= 30.0);
    }
    CHECK(grid.z_i == sl_value(gen_grid(3, 3), grid.best_labeling));

    const auto empty = run_subgradient(build_graph(5, std::vector<std::pair<NodeId, NodeId>>{}));
    CHECK(empty.z_lb == 0);
    CHECK(empty.z_i == 0);
    CHECK(empty.iterations == 0);
  }

  TEST_CASE("every iterate is a valid bound and incumbents are monotone") {
    Rng rng(99);
    for (int trial = 0; trial < 60; ++trial) {
      const Graph g = oracle::random_small(rng, 9);
      if (g.num_edges() == 0) continue;
      const auto opt = oracle::optimum(g).value;
      SubgradientParams p;
      p.max_iter = 120;
      const auto r = run_subgradient(g, p);
      for (auto z : r.z_r_scaled) CHECK(z <= opt * S);
      CHECK(r.z_lb <= opt);
      CHECK(opt <= r.z_i);
      CHECK(r.z_i == sl_value(g, r.best_labeling));
      for (std::size_t s = 1; s < r.trace.size(); ++s) {
        CHECK(r.trace[s].z_lb >= r.trace[s - 1].z_lb);
        CHECK(r.trace[s].z_i <= r.trace[s - 1].z_i);
      }
    }
  }

  TEST_CASE("a vanishing subgradient certifies the relaxation value") {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = oracle::random_small(rng, 8);
      if (g.num_edges() == 0) continue;
      SubgradientParams p;
      p.stop_gap = 1e-12;
      const auto r = run_subgradient(g, p);
      if (r.stop == StopReason::Subgradient) {
        // With g = 0 the x and d solutions are primal feasible and complementary.
        CHECK(r.z_r_scaled.back() == oracle::optimum(g).value * S);
      }
    }
  }

  TEST_CASE("triangle cap and parameter validation") {
    const Graph k5 = gen_gnm(5, 10, 1);
    bool dropped = false;
    const auto m = zero_multipliers(k5, true, 10, &dropped);
    CHECK(dropped);
    CHECK(m.triangles.empty());
    const auto kept = zero_multipliers(k5, true, 1'000'000, &dropped);
    CHECK_FALSE(dropped);
    CHECK(kept.triangles.size() == 10);
    CHECK(kept.lambda.size() == 40);

    SubgradientParams p;
    p.triangle_cap = 10;
    CHECK_FALSE(run_subgradient(k5, p).warnings.empty());

    SubgradientParams bad;
    bad.beta_init = 2.5;
    CHECK_THROWS_AS(run_subgradient(k5, bad), ParameterError);
    bad = {};
    bad.stop_mu = 0;
    CHECK_THROWS_AS(run_subgradient(k5, bad), ParameterError);
    bad = {};
    bad.tau = 0;
    CHECK_THROWS_AS(run_subgradient(k5, bad), ParameterError);
  }

  TEST_CASE("time limit stops the iteration") {
    SubgradientParams p;
    p.time_limit_s = 1e-9;
    const auto r = run_subgradient(gen_gnm(40, 120, 3), p);
    CHECK(r.stop == StopReason::TimeLimit);
  }
}
