#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "slab/dual_ascent.hpp"
#include "slab/error.hpp"
#include "slab/exact.hpp"
#include "slab/heuristics.hpp"
#include "slab/io.hpp"
#include "slab/lagrangian.hpp"
#include "slab/special_graphs.hpp"

namespace slab::cli {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<Label> one_indexed(const Labeling& phi) {
  return {phi.labels().begin(), phi.labels().end()};
}

void finish_bounds(SolveReport& r) {
  if (r.primal_value && r.dual_bound) {
    r.gap_percent = gap_percent(*r.dual_bound, *r.primal_value);
    r.proven_optimal = *r.primal_value == *r.dual_bound;
  }
}

void emit(const SolveReport& r, bool json, std::ostream& out) {
  if (json) {
    out << nlohmann::json(r).dump(2) << "\n";
  } else {
    out << to_text(r);
  }
}

/// Maps toolkit exceptions onto exit codes; prints the reason to err.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kSizeRefusal;
  } catch (const LabelingError& e) {
    err << "invalid labeling: " << e.what() << "\n";
    return kInvalidLabeling;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

SolveReport special_report(const Graph& g, const Structure& s) {
  SolveReport r;
  Labeling phi;
  switch (s.kind) {
    case StructureKind::Path: phi = solve_path(g); break;
    case StructureKind::Cycle: phi = solve_cycle(g); break;
    case StructureKind::PerfectNary: phi = label_perfect_tree(g, s.root, s.depth).labeling; break;
    case StructureKind::Other:
      throw GraphError("instance is not a path, cycle or perfect n-ary tree");
  }
  r.method = "special:" + std::string(structure_name(s.kind));
  r.primal_value = sl_value(g, phi);
  r.dual_bound = dual_ascent_simple(g).bound();
  r.labeling = one_indexed(phi);
  r.stop_reason = "closed-form";
  return r;
}

SolveReport bnb_report(const Graph& g, double time_limit_s, std::uint64_t seed) {
  BnBOptions o;
  o.time_limit_s = time_limit_s;
  o.incumbent_seed = seed;
  const auto res = branch_and_bound(g, o);
  SolveReport r;
  r.method = "bnb";
  r.primal_value = res.ub;
  r.dual_bound = res.lb;
  r.explored_nodes = res.stats.explored;
  r.labeling = one_indexed(res.labeling);
  r.stop_reason = res.stats.proven_optimal ? "optimal" : "limit";
  return r;
}

SolveReport lagrangian_report(const Graph& g, double time_limit_s, std::uint64_t seed) {
  SubgradientParams p;
  p.time_limit_s = time_limit_s;
  p.tie_seed = seed;
  const auto res = run_subgradient(g, p);
  SolveReport r;
  r.method = "lagrangian";
  r.primal_value = res.z_i;
  r.dual_bound = res.z_lb;
  r.iterations = res.iterations;
  r.stop_reason = std::string(stop_reason_name(res.stop));
  r.labeling = one_indexed(res.best_labeling);
  r.warnings = res.warnings;
  return r;
}

SolveReport dual_report(const Graph& g, bool extended) {
  const auto res = extended ? dual_ascent_extended(g) : dual_ascent_simple(g);
  SolveReport r;
  r.method = extended ? "dual-extended" : "dual-simple";
  r.dual_bound = res.bound();
  for (const auto& step : res.trace) r.step_net_changes.push_back(step.net_change);
  r.iterations = static_cast<std::int32_t>(res.trace.size());
  return r;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = generate(opt.spec);
    const std::string text = write_instance(g);
    if (opt.output.empty()) {
      out << text;
      err << "nodes " << g.num_nodes() << " edges " << g.num_edges() << "\n";
    } else {
      write_text_file(opt.output, text);
      out << "nodes " << g.num_nodes() << " edges " << g.num_edges() << "\n";
    }
    return static_cast<int>(kOk);
  });
}

int cmd_gen_suite(const GenSuiteOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::error_code ec;
    fs::create_directories(opt.directory, ec);
    if (ec) throw Error("cannot create directory '" + opt.directory + "': " + ec.message());
    std::size_t written = 0;
    for (const auto& spec : standard_suite()) {
      if (!opt.only_prefix.empty() && spec.name.rfind(opt.only_prefix, 0) != 0) continue;
      write_text_file(fs::path(opt.directory) / (spec.name + ".sl"), write_instance(generate(spec)));
      ++written;
    }
    if (written == 0) throw Error("no suite instance matches prefix '" + opt.only_prefix + "'");
    out << "wrote " << written << " instances to " << opt.directory << "\n";
    return static_cast<int>(kOk);
  });
}

SolveReport solve_graph(const Graph& g, const SolveOptions& opt) {
  if (!contains(kSolveMethods, opt.method)) throw ParameterError("unknown solve method '" + opt.method + "'");
  const auto start = Clock::now();
  SolveReport r;
  if (opt.method == "auto" || opt.method == "special") {
    const Structure s = detect_structure(g);
    if (s.kind != StructureKind::Other) {
      r = special_report(g, s);
    } else if (opt.method == "special") {
      throw GraphError("instance is not a path, cycle or perfect n-ary tree");
    } else {
      r = bnb_report(g, opt.time_limit_s, opt.seed);
    }
  } else if (opt.method == "greedy") {
    const auto h = starting_heuristic(g, opt.seed);
    r.method = "greedy";
    r.primal_value = h.value;
    r.dual_bound = dual_ascent_extended(g).bound();
    r.labeling = one_indexed(h.labeling);
  } else if (opt.method == "lagrangian") {
    r = lagrangian_report(g, opt.time_limit_s, opt.seed);
  } else if (opt.method == "bnb") {
    r = bnb_report(g, opt.time_limit_s, opt.seed);
  } else {
    const auto bf = brute_force(g, opt.oracle_limit);
    r.method = "oracle";
    r.primal_value = bf.value;
    r.dual_bound = bf.value;
    r.labeling = one_indexed(bf.labeling);
    r.stop_reason = "exhaustive";
  }
  r.command = "solve";
  r.nodes = g.num_nodes();
  r.edges = g.num_edges();
  finish_bounds(r);
  r.time_ms = ms_since(start);
  return r;
}

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph_file(opt.file);
    SolveReport r = solve_graph(g, opt);
    r.instance = opt.file;
    if (!opt.labeling_out.empty()) {
      std::vector<Label> labels(r.labeling.begin(), r.labeling.end());
      write_text_file(opt.labeling_out, write_labeling(Labeling(std::move(labels))));
    }
    emit(r, opt.json, out);
    return static_cast<int>(kOk);
  });
}

SolveReport bound_graph(const Graph& g, const BoundOptions& opt) {
  if (!contains(kBoundMethods, opt.method)) throw ParameterError("unknown bound method '" + opt.method + "'");
  const auto start = Clock::now();
  SolveReport r;
  if (opt.method == "lagrangian") {
    r = lagrangian_report(g, opt.time_limit_s, 0);
    r.labeling.clear();
  } else {
    r = dual_report(g, opt.method == "dual-extended");
  }
  r.command = "bound";
  r.nodes = g.num_nodes();
  r.edges = g.num_edges();
  finish_bounds(r);
  r.proven_optimal = false;
  r.time_ms = ms_since(start);
  return r;
}

int cmd_bound(const BoundOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Graph g = load_graph_file(opt.file);
    SolveReport r = bound_graph(g, opt);
    r.instance = opt.file;
    emit(r, opt.json, out);
    return static_cast<int>(kOk);
  });
}

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  Graph g;
  std::string text;
  const int loaded = guarded(err, [&] {
    g = load_graph_file(opt.instance);
    text = read_text_file(opt.labeling);
    return static_cast<int>(kOk);
  });
  if (loaded != kOk) return loaded;

  auto report = [&](bool valid, const std::string& detail, std::optional<Objective> value) {
    if (opt.json) {
      nlohmann::json j{{"valid", valid}, {"reason", detail}};
      j["value"] = value ? nlohmann::json(*value) : nlohmann::json(nullptr);
      out << j.dump(2) << "\n";
    } else if (valid) {
      out << "valid, value " << *value << "\n";
    } else {
      out << "invalid: " << detail << "\n";
    }
  };
  try {
    const Labeling phi = read_labeling(text, g.num_nodes());
    report(true, "", sl_value(g, phi));
    return kOk;
  } catch (const Error& e) {
    report(false, e.what(), std::nullopt);
    return kInvalidLabeling;
  }
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string csv = "name,nodes,edges,method,lb,ub,gap_percent,time_ms,status\n";
  char buf[64];
  auto opt_int = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& r : rows) {
    csv += r.name + ',' + opt_int(r.nodes) + ',' + opt_int(r.edges) + ',' + r.method + ',' + opt_int(r.lb) + ',' +
           opt_int(r.ub) + ',';
    if (r.gap_percent) {
      std::snprintf(buf, sizeof buf, "%.4f", *r.gap_percent);
      csv += buf;
    }
    std::snprintf(buf, sizeof buf, "%.3f", r.time_ms);
    csv += ',';
    csv += buf;
    csv += ',' + r.status + '\n';
  }
  return csv;
}

namespace {

BenchRow bench_one(const Graph& g, const std::string& name, const std::string& method, double limit) {
  BenchRow row;
  row.name = name;
  row.nodes = g.num_nodes();
  row.edges = g.num_edges();
  row.method = method;
  const auto start = Clock::now();
  if (method == "greedy") {
    row.ub = starting_heuristic(g).value;
    row.status = "feasible";
  } else if (method == "dual-simple" || method == "dual-extended") {
    row.lb = (method == "dual-simple" ? dual_ascent_simple(g) : dual_ascent_extended(g)).bound();
    row.status = "bound";
  } else if (method == "lagrangian") {
    SubgradientParams p;
    p.time_limit_s = limit;
    const auto res = run_subgradient(g, p);
    row.lb = res.z_lb;
    row.ub = res.z_i;
    row.status = res.z_lb == res.z_i ? "optimal" : (res.stop == StopReason::TimeLimit ? "limit" : "feasible");
  } else {
    BnBOptions o;
    o.time_limit_s = limit;
    const auto res = branch_and_bound(g, o);
    row.lb = res.lb;
    row.ub = res.ub;
    row.status = res.stats.proven_optimal ? "optimal" : "limit";
  }
  row.time_ms = ms_since(start);
  if (row.lb && row.ub) row.gap_percent = gap_percent(*row.lb, *row.ub);
  return row;
}

unsigned thread_count(const BenchOptions& opt, std::ostream& err) {
  if (opt.threads) return std::max(1u, *opt.threads);
  const char* env = std::getenv("SLAB_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) {
    err << "warning: ignoring SLAB_THREADS='" << env << "'\n";
    return 1;
  }
  return static_cast<unsigned>(v);
}

}  // namespace

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  for (const auto& m : opt.methods) {
    if (!contains(kBenchMethods, m)) {
      err << "error: unknown bench method '" << m << "'\n";
      return kUsage;
    }
  }
  std::error_code ec;
  if (!fs::is_directory(opt.suite, ec)) {
    err << "error: suite '" << opt.suite << "' is not a directory\n";
    return kUsage;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(opt.suite, ec)) {
    if (!entry.is_directory()) files.push_back(entry.path());
  }
  if (files.empty()) {
    err << "error: suite '" << opt.suite << "' contains no instance files\n";
    return kUsage;
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    const auto sa = a.stem().string();
    const auto sb = b.stem().string();
    return sa != sb ? sa < sb : a.filename() < b.filename();
  });

  std::vector<std::vector<BenchRow>> results(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      const std::string name = files[i].stem().string();
      try {
        const Graph g = load_graph_file(files[i]);
        for (const auto& m : opt.methods) results[i].push_back(bench_one(g, name, m, opt.time_limit_s));
      } catch (const std::exception&) {
        results[i].clear();
        for (const auto& m : opt.methods) {
          BenchRow row;
          row.name = name;
          row.method = m;
          row.status = "error";
          results[i].push_back(std::move(row));
        }
      }
    }
  };
  const unsigned threads = std::min<std::size_t>(thread_count(opt, err), files.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<BenchRow> rows;
  for (auto& per_file : results) rows.insert(rows.end(), per_file.begin(), per_file.end());
  const std::string csv = bench_csv(rows);
  try {
    if (opt.output.empty()) {
      out << csv;
    } else {
      write_text_file(opt.output, csv);
      out << "wrote " << rows.size() << " rows to " << opt.output << "\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace slab::cli
