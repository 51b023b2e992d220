#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "commands.hpp"
#include "report.hpp"
#include "slab/instances.hpp"
#include "slab/io.hpp"
#include "slab/labeling.hpp"

using namespace slab;
using namespace slab::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("slab_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

SolveOptions solve_with(std::string method, std::string file = {}, std::string labeling_out = {}) {
  SolveOptions o;
  o.method = std::move(method);
  o.file = std::move(file);
  o.labeling_out = std::move(labeling_out);
  return o;
}

BoundOptions bound_with(std::string method) {
  BoundOptions o;
  o.method = std::move(method);
  return o;
}

CheckOptions check_of(const std::string& instance, const std::string& labeling) {
  CheckOptions o;
  o.instance = instance;
  o.labeling = labeling;
  return o;
}

const std::vector<std::pair<NodeId, NodeId>> kNoEdges;

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("gap percent convention") {
    CHECK(gap_percent(30, 30) == 0.0);
    CHECK(gap_percent(27, 30) == doctest::Approx(10.0));
    CHECK(gap_percent(0, 0) == 0.0);
    CHECK(gap_percent(50, 100) >= 0.0);
  }

  TEST_CASE("JSON report round trip") {
    SolveReport r;
    r.command = "solve";
    r.instance = "g.sl";
    r.method = "bnb";
    r.nodes = 9;
    r.edges = 12;
    r.primal_value = 30;
    r.dual_bound = 27;
    r.gap_percent = 10.0;
    r.time_ms = 1.25;
    r.explored_nodes = 5;
    r.labeling = {5, 1, 6, 2, 7, 3, 8, 4, 9};
    r.warnings = {"w"};
    const nlohmann::json j = r;
    CHECK(j.get<SolveReport>() == r);
    CHECK(nlohmann::json::parse(j.dump()).get<SolveReport>() == r);

    const auto solved = solve_graph(gen_grid(3, 3), solve_with("bnb"));
    CHECK(nlohmann::json::parse(nlohmann::json(solved).dump()).get<SolveReport>() == solved);
    const auto bounded = bound_graph(gen_grid(3, 3), bound_with("dual-simple"));
    CHECK(nlohmann::json::parse(nlohmann::json(bounded).dump()).get<SolveReport>() == bounded);
  }

  TEST_CASE("solve methods") {
    const Graph grid = gen_grid(3, 3);
    const auto bnb = solve_graph(grid, solve_with("bnb"));
    CHECK(bnb.primal_value == 30);
    CHECK(bnb.proven_optimal);
    CHECK(bnb.gap_percent == 0.0);
    const auto autop = solve_graph(gen_path(5), solve_with("auto"));
    CHECK(autop.method == "special:path");
    CHECK(autop.primal_value == 6);
    CHECK(solve_graph(gen_cycle(6), solve_with("auto")).method == "special:cycle");
    CHECK(solve_graph(gen_perfect_nary(2, 3).graph, solve_with("auto")).primal_value == 40);
    CHECK(solve_graph(grid, solve_with("auto")).method == "bnb");
    const auto greedy = solve_graph(grid, solve_with("greedy"));
    CHECK(3 * *greedy.primal_value < 12 * 10);
    CHECK(solve_graph(grid, solve_with("oracle")).primal_value == 30);
    const auto lag = solve_graph(grid, solve_with("lagrangian"));
    CHECK(*lag.dual_bound <= 30);
    CHECK(*lag.primal_value >= 30);
    for (const auto& r : {bnb, autop, greedy, lag}) {
      const Graph& g = r.method == "special:path" ? gen_path(5) : grid;
      std::vector<Label> labels(r.labeling.begin(), r.labeling.end());
      CHECK(sl_value(g, Labeling(labels)) == *r.primal_value);
    }
  }

  TEST_CASE("bound methods") {
    const Graph grid = gen_grid(3, 3);
    CHECK(bound_graph(grid, bound_with("dual-simple")).dual_bound == 24);
    const auto ext = bound_graph(grid, bound_with("dual-extended"));
    CHECK(ext.dual_bound == 27);
    CHECK(ext.step_net_changes == std::vector<Objective>{8, 5, 2});
    CHECK(bound_graph(build_graph(4, kNoEdges), bound_with("dual-extended")).dual_bound == 0);
  }

  TEST_CASE("command exit codes") {
    const auto dir = scratch_dir("codes");
    const auto grid = (dir / "g.sl").string();
    write_text_file(grid, write_instance(gen_grid(3, 3)));
    write_text_file(dir / "fig.lab", "1 5\n2 1\n3 6\n4 2\n5 7\n6 3\n7 8\n8 4\n9 9\n");
    write_text_file(dir / "dup.lab", "1 5\n2 5\n3 6\n4 2\n5 7\n6 3\n7 8\n8 4\n9 9\n");
    write_text_file(dir / "short.lab", "1 1\n2 2\n");
    std::ostringstream out, err;
    CHECK(cmd_check(check_of(grid, (dir / "fig.lab").string()), out, err) == kOk);
    CHECK(out.str() == "valid, value 30\n");
    CHECK(cmd_check(check_of(grid, (dir / "dup.lab").string()), out, err) == kInvalidLabeling);
    CHECK(cmd_check(check_of(grid, (dir / "short.lab").string()), out, err) == kInvalidLabeling);
    CHECK(cmd_check(check_of((dir / "missing.sl").string(), (dir / "fig.lab").string()), out, err) == kUsage);
    CHECK(cmd_solve(solve_with("auto", (dir / "missing.sl").string()), out, err) == kUsage);
    auto limited = solve_with("oracle", grid);
    limited.oracle_limit = 5;
    CHECK(cmd_solve(limited, out, err) == kSizeRefusal);
    CHECK(cmd_solve(solve_with("special", grid), out, err) == kUsage);

    GenOptions gen;
    gen.spec.kind = InstanceKind::Grid;
    gen.output = (dir / "bad.sl").string();
    CHECK(cmd_gen(gen, out, err) == kUsage);  // rows and cols missing
    gen.spec.rows = 3;
    gen.spec.cols = 3;
    CHECK(cmd_gen(gen, out, err) == kOk);
    CHECK(read_text_file(dir / "bad.sl").rfind("p sl 9 12\n", 0) == 0);
  }

  TEST_CASE("emitted labelings pass check") {
    const auto dir = scratch_dir("labels");
    const auto file = (dir / "t.sl").string();
    write_text_file(file, write_instance(gen_gnm(9, 16, 4)));
    for (const std::string method : {"auto", "greedy", "lagrangian", "bnb", "oracle"}) {
      std::ostringstream out, err;
      const auto lab = (dir / (method + ".lab")).string();
      REQUIRE(cmd_solve(solve_with(method, file, lab), out, err) == kOk);
      std::ostringstream cout_check;
      CHECK(cmd_check(check_of(file, lab), cout_check, err) == kOk);
    }
  }

  TEST_CASE("bench output") {
    const auto dir = scratch_dir("bench");
    write_text_file(dir / "b.sl", write_instance(gen_grid(3, 3)));
    write_text_file(dir / "a.sl", write_instance(gen_path(5)));
    write_text_file(dir / "c.sl", "not an instance\n");
    BenchOptions opt;
    opt.suite = dir.string();
    opt.methods = {"greedy", "bnb"};
    opt.time_limit_s = 5;
    std::ostringstream out, err;
    REQUIRE(cmd_bench(opt, out, err) == kOk);
    std::istringstream lines(out.str());
    std::vector<std::string> rows;
    for (std::string line; std::getline(lines, line);) rows.push_back(line);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == "name,nodes,edges,method,lb,ub,gap_percent,time_ms,status");
    CHECK(rows[1].rfind("a,5,4,greedy,,", 0) == 0);
    CHECK(rows[2].rfind("a,5,4,bnb,6,6,0.0000,", 0) == 0);
    CHECK(rows[4].rfind("b,9,12,bnb,30,30,0.0000,", 0) == 0);
    CHECK(rows[4].substr(rows[4].size() - 8) == ",optimal");
    CHECK(rows[5] == "c,,,greedy,,,,0.000,error");

    opt.threads = 3;
    std::ostringstream par;
    REQUIRE(cmd_bench(opt, par, err) == kOk);
    std::istringstream plines(par.str());
    std::vector<std::string> prow;
    for (std::string line; std::getline(plines, line);) prow.push_back(line);
    REQUIRE(prow.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(prow[i].substr(0, 12) == rows[i].substr(0, 12));

    const auto empty = scratch_dir("bench_empty");
    opt.suite = empty.string();
    CHECK(cmd_bench(opt, out, err) == kUsage);
  }
}
