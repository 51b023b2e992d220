#pragma once

#include <cstdint>
#include <string_view>

#include "slab/graph.hpp"
#include "slab/labeling.hpp"

namespace slab {

enum class StructureKind { Path, Cycle, PerfectNary, Other };

std::string_view structure_name(StructureKind kind);

struct Structure {
  StructureKind kind = StructureKind::Other;
  std::int32_t arity = 0;  // PerfectNary only
  std::int32_t depth = 0;  // PerfectNary only
  NodeId root = -1;        // PerfectNary only
};

/// O(|V|+|E|) classification. Checked in the order Path, Cycle, PerfectNary,
/// so P_n is never reported as a unary tree and K_{1,1} is a path.
Structure detect_structure(const Graph& g);

/// Walks from the lower-indexed endpoint; even positions get 1,2,...,
/// odd positions the remaining labels in walk order. Throws GraphError if g is not a path.
Labeling solve_path(const Graph& g);

/// Same alternation along the cycle starting at node 0 and stepping to its
/// smaller neighbour. Throws GraphError if g is not a cycle.
Labeling solve_cycle(const Graph& g);

struct NaryLabeling {
  Labeling labeling;
  Objective value = 0;
};

/// Labels a perfect tree rooted at `root` whose leaves all sit at `depth`.
/// Odd depth: even-depth nodes take the smallest labels, the root last among them.
/// Even depth: odd-depth nodes first, then the root, then the remaining nodes.
/// Within each block nodes are taken in BFS order from the root.
NaryLabeling label_perfect_tree(const Graph& g, NodeId root, std::int32_t depth);

/// label_perfect_tree on gen_perfect_nary(arity, depth). Throws ParameterError
/// unless arity >= 1 and depth >= 1.
NaryLabeling solve_perfect_nary(std::int32_t arity, std::int32_t depth);

/// Exact fraction in lowest terms with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  bool is_integer() const noexcept { return den == 1; }
  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class PathCycle { Path, Cycle };

/// Closed-form optimum. Path needs n_nodes >= 2, cycle n_nodes >= 3; ParameterError otherwise.
Objective formula_path_cycle(PathCycle kind, NodeId n_nodes);

struct FormulaValue {
  Rational value;
  bool integral = false;
};

/// The published closed expression for perfect n-ary trees, evaluated verbatim.
/// It is fractional for many (arity, depth); the algorithmic value is authoritative.
FormulaValue formula_nary(std::int32_t arity, std::int32_t depth);

/// Number of nodes of the perfect tree; ParameterError if it exceeds NodeId.
std::int64_t perfect_nary_size(std::int32_t arity, std::int32_t depth);

}  // namespace slab
