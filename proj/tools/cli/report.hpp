#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "slab/graph.hpp"

namespace slab::cli {

/// Machine-readable result of `solve` and `bound`. Labels are 1-indexed by node.
struct SolveReport {
  std::string command;  // "solve" or "bound"
  std::string instance;
  std::string method;
  NodeId nodes = 0;
  EdgeId edges = 0;
  std::optional<Objective> primal_value;
  std::optional<Objective> dual_bound;
  std::optional<double> gap_percent;
  bool proven_optimal = false;
  double time_ms = 0;
  std::optional<std::int64_t> explored_nodes;
  std::optional<std::int32_t> iterations;
  std::string stop_reason;
  std::vector<Objective> step_net_changes;
  std::vector<Label> labeling;
  std::vector<std::string> warnings;

  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

/// 100 (ub - lb) / ub; zero when the bounds meet.
double gap_percent(Objective lb, Objective ub);

void to_json(nlohmann::json& j, const SolveReport& r);
void from_json(const nlohmann::json& j, SolveReport& r);

/// Human-readable multi-line summary.
std::string to_text(const SolveReport& r);

}  // namespace slab::cli
