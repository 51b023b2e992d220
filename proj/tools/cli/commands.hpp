#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"
#include "slab/graph.hpp"
#include "slab/instances.hpp"

namespace slab::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kSizeRefusal = 3, kInvalidLabeling = 4 };

struct GenOptions {
  InstanceSpec spec;
  std::string output;  // empty: stdout
};
int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);

struct GenSuiteOptions {
  std::string directory;
  std::string only_prefix;  // empty: every instance
};
int cmd_gen_suite(const GenSuiteOptions& opt, std::ostream& out, std::ostream& err);

struct SolveOptions {
  std::string file;
  std::string method = "auto";  // auto|greedy|lagrangian|bnb|special|oracle
  double time_limit_s = 60.0;
  bool json = false;
  std::string labeling_out;
  std::int32_t oracle_limit = 12;
  std::uint64_t seed = 0;
};
/// Runs the solver and fills `report`. Throws on solver errors.
SolveReport solve_graph(const Graph& g, const SolveOptions& opt);
int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);

struct BoundOptions {
  std::string file;
  std::string method = "dual-extended";  // dual-simple|dual-extended|lagrangian
  double time_limit_s = 60.0;
  bool json = false;
};
SolveReport bound_graph(const Graph& g, const BoundOptions& opt);
int cmd_bound(const BoundOptions& opt, std::ostream& out, std::ostream& err);

struct CheckOptions {
  std::string instance;
  std::string labeling;
  bool json = false;
};
int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::string suite;
  std::string output;  // empty: stdout
  double time_limit_s = 10.0;
  std::vector<std::string> methods{"greedy", "dual-extended", "lagrangian", "bnb"};
  std::optional<unsigned> threads;  // default: SLAB_THREADS, else 1
};

struct BenchRow {
  std::string name;
  std::optional<NodeId> nodes;
  std::optional<EdgeId> edges;
  std::string method;
  std::optional<Objective> lb;
  std::optional<Objective> ub;
  std::optional<double> gap_percent;
  double time_ms = 0;
  std::string status;  // optimal|feasible|bound|limit|error
};

std::string bench_csv(const std::vector<BenchRow>& rows);
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

inline const std::vector<std::string> kSolveMethods{"auto", "greedy", "lagrangian", "bnb", "special", "oracle"};
inline const std::vector<std::string> kBoundMethods{"dual-simple", "dual-extended", "lagrangian"};
inline const std::vector<std::string> kBenchMethods{"greedy", "dual-simple", "dual-extended", "lagrangian", "bnb"};

}  // namespace slab::cli
