#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "slab/graph.hpp"
#include "slab/labeling.hpp"

namespace slab {

// Instance files are 1-indexed ASCII with LF endings:
//
//   c <free comment>        (any number, optional)
//   p sl <n> <m>
//   e <u> <v>               (exactly m lines, 1 <= u < v <= n)
//
// All parse functions throw ParseError carrying the offending line number.

Graph read_instance(std::string_view text);
std::string write_instance(const Graph& g);

/// n lines "<node> <label>", both 1-indexed, any node order.
Labeling read_labeling(std::string_view text, NodeId n);
std::string write_labeling(const Labeling& phi);

/// Coordinate MatrixMarket, pattern or numeric (values ignored). Off-diagonal
/// entries become undirected edges; duplicates merge, diagonal entries drop.
/// Throws UnsupportedFormatError for array format or non-matrix objects.
Graph read_matrix_market_pattern(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Reads an instance file; ".mtx" files and files starting with "%%MatrixMarket"
/// go through the MatrixMarket reader.
Graph load_graph_file(const std::filesystem::path& path);

}  // namespace slab
