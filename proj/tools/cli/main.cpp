#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "slab/error.hpp"

using namespace slab;
using namespace slab::cli;

int main(int argc, char** argv) {
  CLI::App app{"slab: S-labeling solver toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  std::string kind;
  auto* g = app.add_subcommand("gen", "Generate one instance file");
  g->add_option("--kind", kind, "path|cycle|nary|grid|gnm|tree|caterpillar|lobster|bipartite")->required();
  g->add_option("--nodes", gen.spec.nodes, "Node count (path, cycle, gnm, tree)");
  g->add_option("--edges", gen.spec.edges, "Edge count (gnm)");
  g->add_option("--arity", gen.spec.arity, "Children per internal node (nary)");
  g->add_option("--depth", gen.spec.depth, "Leaf depth (nary)");
  g->add_option("--rows", gen.spec.rows, "Grid rows");
  g->add_option("--cols", gen.spec.cols, "Grid columns");
  g->add_option("--backbone", gen.spec.backbone, "Expected backbone length (caterpillar, lobster)");
  g->add_option("--p1", gen.spec.p1, "Leaf probability (caterpillar, lobster)");
  g->add_option("--p2", gen.spec.p2, "Second-level leaf probability (lobster)");
  g->add_option("--n1", gen.spec.n1, "Left side size (bipartite)");
  g->add_option("--n2", gen.spec.n2, "Right side size (bipartite)");
  g->add_option("--p", gen.spec.p, "Edge probability (bipartite)");
  g->add_option("--seed", gen.spec.seed, "PRNG seed");
  g->add_option("-o,--output", gen.output, "Output file (default stdout)");

  GenSuiteOptions suite;
  auto* gs = app.add_subcommand("gen-suite", "Write the standard benchmark suite");
  gs->add_option("dir", suite.directory, "Target directory")->required();
  gs->add_option("--only", suite.only_prefix, "Keep instances whose name starts with this prefix");

  SolveOptions solve;
  auto* s = app.add_subcommand("solve", "Solve an instance");
  s->add_option("file", solve.file, "Instance file (.sl or MatrixMarket)")->required();
  s->add_option("--method", solve.method)->check(CLI::IsMember(kSolveMethods))->capture_default_str();
  s->add_option("--time-limit", solve.time_limit_s, "Seconds")->check(CLI::PositiveNumber)->capture_default_str();
  s->add_option("--oracle-limit", solve.oracle_limit, "Largest node count the oracle accepts")->capture_default_str();
  s->add_option("--seed", solve.seed, "Greedy tie-break seed (0: lowest index)");
  s->add_option("--labeling-out", solve.labeling_out, "Write the labeling to this file");
  s->add_flag("--json", solve.json, "Emit a JSON report");

  BoundOptions bound;
  auto* b = app.add_subcommand("bound", "Compute a lower bound");
  b->add_option("file", bound.file, "Instance file")->required();
  b->add_option("--method", bound.method)->check(CLI::IsMember(kBoundMethods))->capture_default_str();
  b->add_option("--time-limit", bound.time_limit_s, "Seconds (lagrangian)")->check(CLI::PositiveNumber);
  b->add_flag("--json", bound.json, "Emit a JSON report");

  CheckOptions check;
  auto* c = app.add_subcommand("check", "Validate a labeling and print its value");
  c->add_option("instance", check.instance)->required();
  c->add_option("labeling", check.labeling)->required();
  c->add_flag("--json", check.json, "Emit a JSON report");

  BenchOptions bench;
  std::vector<std::string> methods;
  auto* be = app.add_subcommand("bench", "Run methods over a directory of instances, write CSV");
  be->add_option("--suite", bench.suite, "Instance directory")->required();
  be->add_option("--out", bench.output, "CSV file (default stdout)");
  be->add_option("--time-limit", bench.time_limit_s, "Seconds per instance and method")->check(CLI::PositiveNumber);
  be->add_option("--methods", methods, "Subset of greedy,dual-simple,dual-extended,lagrangian,bnb")
      ->delimiter(',')
      ->check(CLI::IsMember(kBenchMethods));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (g->parsed()) {
    const auto k = parse_kind(kind);
    if (!k) {
      std::cerr << "error: unknown kind '" << kind << "'\n";
      return kUsage;
    }
    gen.spec.kind = *k;
    return cmd_gen(gen, std::cout, std::cerr);
  }
  if (gs->parsed()) return cmd_gen_suite(suite, std::cout, std::cerr);
  if (s->parsed()) return cmd_solve(solve, std::cout, std::cerr);
  if (b->parsed()) return cmd_bound(bound, std::cout, std::cerr);
  if (c->parsed()) return cmd_check(check, std::cout, std::cerr);
  if (!methods.empty()) bench.methods = methods;
  return cmd_bench(bench, std::cout, std::cerr);
}
