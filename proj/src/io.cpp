#include "slab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "slab/error.hpp"

namespace slab {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

/// Calls fn(line_number, line) for every line, without the terminator.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(++number, line);
    start = end + 1;
  }
}

std::optional<std::int64_t> to_int(std::string_view tok) {
  std::int64_t value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

std::int64_t int_or_throw(std::string_view tok, std::size_t line, const char* what) {
  auto v = to_int(tok);
  if (!v) throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
  return *v;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::uint64_t pair_key(NodeId u, NodeId v, NodeId n) {
  return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
}

}  // namespace

Graph read_instance(std::string_view text) {
  std::optional<std::pair<NodeId, std::int64_t>> header;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::unordered_set<std::uint64_t> seen;
  std::size_t last_line = 0;

  for_each_line(text, [&](std::size_t no, std::string_view raw) {
    last_line = no;
    auto tok = split_ws(raw);
    if (tok.empty()) return;
    if (tok[0] == "c") return;
    if (tok[0] == "p") {
      if (header) throw ParseError(no, "second header line");
      if (tok.size() != 4 || tok[1] != "sl") throw ParseError(no, "malformed header, expected 'p sl <n> <m>'");
      const auto n = int_or_throw(tok[2], no, "node count");
      const auto m = int_or_throw(tok[3], no, "edge count");
      if (n < 0 || n > std::numeric_limits<NodeId>::max()) throw ParseError(no, "node count out of range");
      if (m < 0 || m > n * (n - 1) / 2) throw ParseError(no, "edge count " + std::to_string(m) + " impossible for " + std::to_string(n) + " nodes");
      header = {{static_cast<NodeId>(n), m}};
      edges.reserve(static_cast<std::size_t>(m));
      return;
    }
    if (tok[0] == "e") {
      if (!header) throw ParseError(no, "edge line before header");
      if (tok.size() != 3) throw ParseError(no, "malformed edge line, expected 'e <u> <v>'");
      const auto n = header->first;
      const auto u = int_or_throw(tok[1], no, "endpoint");
      const auto v = int_or_throw(tok[2], no, "endpoint");
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(no, "endpoint out of range 1.." + std::to_string(n) + " in edge " +
                                 std::to_string(u) + " " + std::to_string(v));
      }
      if (u == v) throw ParseError(no, "self-loop at node " + std::to_string(u));
      if (static_cast<std::int64_t>(edges.size()) == header->second) {
        throw ParseError(no, "more edge lines than the " + std::to_string(header->second) + " declared");
      }
      auto a = static_cast<NodeId>(std::min(u, v) - 1);
      auto b = static_cast<NodeId>(std::max(u, v) - 1);
      if (!seen.insert(pair_key(a, b, n)).second) {
        throw ParseError(no, "duplicate edge " + std::to_string(a + 1) + " " + std::to_string(b + 1));
      }
      edges.emplace_back(a, b);
      return;
    }
    throw ParseError(no, "unrecognised line type '" + std::string(tok[0]) + "'");
  });

  if (!header) throw ParseError(last_line, "missing header line 'p sl <n> <m>'");
  if (static_cast<std::int64_t>(edges.size()) != header->second) {
    throw ParseError(last_line, "header declares " + std::to_string(header->second) + " edges, found " +
                                    std::to_string(edges.size()));
  }
  return build_graph(header->first, edges);
}

std::string write_instance(const Graph& g) {
  std::string out = "p sl " + std::to_string(g.num_nodes()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e ";
    out += std::to_string(e.u + 1);
    out += ' ';
    out += std::to_string(e.v + 1);
    out += '\n';
  }
  return out;
}

Labeling read_labeling(std::string_view text, NodeId n) {
  std::vector<Label> labels(static_cast<std::size_t>(n), 0);
  std::vector<std::int64_t> owner(static_cast<std::size_t>(n), 0);  // 1-indexed node holding each label
  std::size_t count = 0;
  std::size_t last_line = 0;
  for_each_line(text, [&](std::size_t no, std::string_view raw) {
    last_line = no;
    auto tok = split_ws(raw);
    if (tok.empty()) return;
    if (tok.size() != 2) throw ParseError(no, "expected '<node> <label>'");
    const auto node = int_or_throw(tok[0], no, "node");
    const auto label = int_or_throw(tok[1], no, "label");
    if (node < 1 || node > n) throw ParseError(no, "node " + std::to_string(node) + " outside 1.." + std::to_string(n));
    if (label < 1 || label > n) throw ParseError(no, "label " + std::to_string(label) + " outside 1.." + std::to_string(n));
    auto& slot = labels[static_cast<std::size_t>(node - 1)];
    if (slot != 0) throw ParseError(no, "node " + std::to_string(node) + " labelled twice");
    auto& holder = owner[static_cast<std::size_t>(label - 1)];
    if (holder != 0) {
      throw ParseError(no, "label " + std::to_string(label) + " used by nodes " + std::to_string(holder) + " and " +
                               std::to_string(node));
    }
    holder = node;
    slot = static_cast<Label>(label);
    ++count;
  });
  if (count != static_cast<std::size_t>(n)) {
    throw ParseError(last_line, "labeling has " + std::to_string(count) + " entries, instance has " +
                                    std::to_string(n) + " nodes");
  }
  return Labeling(std::move(labels));
}

std::string write_labeling(const Labeling& phi) {
  std::string out;
  for (NodeId i = 0; i < phi.size(); ++i) {
    out += std::to_string(i + 1);
    out += ' ';
    out += std::to_string(phi.label(i));
    out += '\n';
  }
  return out;
}

Graph read_matrix_market_pattern(std::string_view text) {
  bool saw_banner = false;
  std::optional<std::int64_t> size_n;
  std::int64_t expected = 0;
  std::int64_t entries = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::unordered_set<std::uint64_t> seen;
  std::size_t last_line = 0;

  for_each_line(text, [&](std::size_t no, std::string_view raw) {
    last_line = no;
    if (!saw_banner) {
      auto tok = split_ws(raw);
      if (tok.empty() || lower(tok[0]) != "%%matrixmarket") throw ParseError(no, "missing %%MatrixMarket banner");
      if (tok.size() < 3 || lower(tok[1]) != "matrix") throw UnsupportedFormatError("only MatrixMarket 'matrix' objects are supported");
      if (lower(tok[2]) != "coordinate") {
        throw UnsupportedFormatError("unsupported MatrixMarket format '" + std::string(tok[2]) + "', expected coordinate");
      }
      saw_banner = true;
      return;
    }
    if (!raw.empty() && raw.front() == '%') return;
    auto tok = split_ws(raw);
    if (tok.empty()) return;
    if (!size_n) {
      if (tok.size() != 3) throw ParseError(no, "expected size line '<rows> <cols> <entries>'");
      const auto rows = int_or_throw(tok[0], no, "row count");
      const auto cols = int_or_throw(tok[1], no, "column count");
      expected = int_or_throw(tok[2], no, "entry count");
      if (rows != cols) throw ParseError(no, "matrix is not square");
      if (rows < 0 || rows > std::numeric_limits<NodeId>::max() || expected < 0) throw ParseError(no, "size out of range");
      size_n = rows;
      return;
    }
    if (tok.size() < 2) throw ParseError(no, "expected '<row> <col> [value]'");
    const auto r = int_or_throw(tok[0], no, "row");
    const auto c = int_or_throw(tok[1], no, "column");
    if (r < 1 || r > *size_n || c < 1 || c > *size_n) throw ParseError(no, "entry index out of range");
    if (++entries > expected) throw ParseError(no, "more entries than declared");
    if (r == c) return;
    const auto n = static_cast<NodeId>(*size_n);
    const auto a = static_cast<NodeId>(std::min(r, c) - 1);
    const auto b = static_cast<NodeId>(std::max(r, c) - 1);
    if (seen.insert(pair_key(a, b, n)).second) edges.emplace_back(a, b);
  });

  if (!saw_banner) throw ParseError(0, "empty MatrixMarket input");
  if (!size_n) throw ParseError(last_line, "missing size line");
  if (entries != expected) {
    throw ParseError(last_line, "declared " + std::to_string(expected) + " entries, found " + std::to_string(entries));
  }
  return build_graph(static_cast<NodeId>(*size_n), edges);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("cannot read '" + path.string() + "'");
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("cannot write '" + path.string() + "'");
}

Graph load_graph_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const bool mm = lower(path.extension().string()) == ".mtx" || lower(text.substr(0, 14)) == "%%matrixmarket";
  return mm ? read_matrix_market_pattern(text) : read_instance(text);
}

}  // namespace slab
