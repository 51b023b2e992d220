#include "report.hpp"

#include <sstream>

namespace slab::cli {

double gap_percent(Objective lb, Objective ub) {
  if (lb == ub || ub == 0) return 0.0;
  return 100.0 * static_cast<double>(ub - lb) / static_cast<double>(ub);
}

namespace {

template <typename T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <typename T>
void get_optional(const nlohmann::json& j, const char* key, std::optional<T>& v) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) {
    v.reset();
  } else {
    v = it->get<T>();
  }
}

}  // namespace

void to_json(nlohmann::json& j, const SolveReport& r) {
  j = nlohmann::json{{"command", r.command},
                     {"instance", r.instance},
                     {"method", r.method},
                     {"nodes", r.nodes},
                     {"edges", r.edges},
                     {"proven_optimal", r.proven_optimal},
                     {"time_ms", r.time_ms},
                     {"stop_reason", r.stop_reason},
                     {"step_net_changes", r.step_net_changes},
                     {"labeling", r.labeling},
                     {"warnings", r.warnings}};
  put_optional(j, "primal_value", r.primal_value);
  put_optional(j, "dual_bound", r.dual_bound);
  put_optional(j, "gap_percent", r.gap_percent);
  put_optional(j, "explored_nodes", r.explored_nodes);
  put_optional(j, "iterations", r.iterations);
}

void from_json(const nlohmann::json& j, SolveReport& r) {
  j.at("command").get_to(r.command);
  j.at("instance").get_to(r.instance);
  j.at("method").get_to(r.method);
  j.at("nodes").get_to(r.nodes);
  j.at("edges").get_to(r.edges);
  j.at("proven_optimal").get_to(r.proven_optimal);
  j.at("time_ms").get_to(r.time_ms);
  j.at("stop_reason").get_to(r.stop_reason);
  j.at("step_net_changes").get_to(r.step_net_changes);
  j.at("labeling").get_to(r.labeling);
  j.at("warnings").get_to(r.warnings);
  get_optional(j, "primal_value", r.primal_value);
  get_optional(j, "dual_bound", r.dual_bound);
  get_optional(j, "gap_percent", r.gap_percent);
  get_optional(j, "explored_nodes", r.explored_nodes);
  get_optional(j, "iterations", r.iterations);
}

std::string to_text(const SolveReport& r) {
  std::ostringstream out;
  out << "instance " << r.instance << " (" << r.nodes << " nodes, " << r.edges << " edges)\n";
  out << "method " << r.method << "\n";
  if (r.primal_value) out << "primal value " << *r.primal_value << "\n";
  if (r.dual_bound) out << "lower bound " << *r.dual_bound << "\n";
  if (r.gap_percent) out << "gap " << *r.gap_percent << " %\n";
  if (r.command == "solve") out << (r.proven_optimal ? "proven optimal\n" : "not proven optimal\n");
  if (!r.step_net_changes.empty()) {
    out << "step net changes";
    for (auto v : r.step_net_changes) out << ' ' << (v >= 0 ? "+" : "") << v;
    out << "\n";
  }
  if (r.iterations) out << "iterations " << *r.iterations << "\n";
  if (r.explored_nodes) out << "explored nodes " << *r.explored_nodes << "\n";
  if (!r.stop_reason.empty()) out << "stopped by " << r.stop_reason << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  out << "time " << r.time_ms << " ms\n";
  return out.str();
}

}  // namespace slab::cli
