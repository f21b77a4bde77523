#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cliquelab/error.hpp"
#include "cliquelab/graph.hpp"

namespace cliquelab {

enum class GraphFormat { edge_list, dimacs_col };

inline std::string_view to_string(GraphFormat f) noexcept {
  return f == GraphFormat::edge_list ? "edge_list" : "dimacs_col";
}

inline GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edge_list" || name == "edges") return GraphFormat::edge_list;
  if (name == "dimacs_col" || name == "dimacs" || name == "col") {
    return GraphFormat::dimacs_col;
  }
  throw ParameterError("unknown graph format '" + std::string(name) +
                       "' (expected edge_list or dimacs_col)");
}

/// Picks dimacs_col for .col/.dimacs extensions, edge_list otherwise.
inline GraphFormat guess_graph_format(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return (ext == ".col" || ext == ".dimacs") ? GraphFormat::dimacs_col
                                             : GraphFormat::edge_list;
}

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::uint64_t parse_id(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(ErrorKind::parse, line_no,
                     "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

// "# n N m M" as the first non-blank line declares dense ids 0..N-1 with no
// remapping, which keeps isolated vertices and the labeling intact.
inline std::optional<std::uint64_t> dense_header(std::string_view line) {
  const auto tokens = split_ws(line);
  if (tokens.size() != 5 || tokens[0] != "#" || tokens[1] != "n" || tokens[3] != "m") {
    return std::nullopt;
  }
  std::uint64_t n = 0;
  const auto [ptr, ec] =
      std::from_chars(tokens[2].data(), tokens[2].data() + tokens[2].size(), n);
  if (ec != std::errc{} || ptr != tokens[2].data() + tokens[2].size()) return std::nullopt;
  return n;
}

inline Graph read_edge_list(std::istream& in) {
  // Without a dense header, labels are remapped to 0..n-1 in order of first
  // appearance.
  std::unordered_map<std::uint64_t, Vertex> ids;
  std::optional<std::uint64_t> dense;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  auto intern = [&](std::uint64_t label) {
    if (dense) {
      if (label >= *dense) {
        throw ParseError(ErrorKind::id_range, line_no,
                         "vertex id " + std::to_string(label) + " outside declared [0," +
                             std::to_string(*dense) + ")");
      }
      return static_cast<Vertex>(label);
    }
    auto [it, inserted] = ids.try_emplace(label, static_cast<Vertex>(ids.size()));
    return it->second;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (!seen_content && !split_ws(view).empty()) {
      seen_content = true;
      dense = dense_header(view);
    }
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    const auto tokens = split_ws(view);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError(ErrorKind::parse, line_no, "expected 'u v', got " +
                                                      std::to_string(tokens.size()) +
                                                      " fields");
    }
    const auto a = parse_id(tokens[0], line_no);
    const auto b = parse_id(tokens[1], line_no);
    if (a == b) {
      throw ParseError(ErrorKind::self_loop, line_no,
                       "self-loop on vertex " + std::to_string(a));
    }
    Vertex u = intern(a), v = intern(b);
    if (u > v) std::swap(u, v);
    edges.push_back({u, v});
  }
  return Graph::from_edges(dense ? static_cast<std::size_t>(*dense) : ids.size(), edges);
}

inline Graph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(ErrorKind::parse, line_no, "duplicate 'p' line");
      if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
        throw ParseError(ErrorKind::parse, line_no, "expected 'p edge n m'");
      }
      n = parse_id(tokens[2], line_no);
      parse_id(tokens[3], line_no);
      have_header = true;
    } else if (tokens[0] == "e") {
      if (!have_header) {
        throw ParseError(ErrorKind::parse, line_no, "'e' line before 'p' line");
      }
      if (tokens.size() != 3) throw ParseError(ErrorKind::parse, line_no, "expected 'e u v'");
      const auto a = parse_id(tokens[1], line_no);
      const auto b = parse_id(tokens[2], line_no);
      if (a < 1 || a > n || b < 1 || b > n) {
        throw ParseError(ErrorKind::id_range, line_no,
                         "vertex id out of range [1," + std::to_string(n) + "]");
      }
      if (a == b) {
        throw ParseError(ErrorKind::self_loop, line_no,
                         "self-loop on vertex " + std::to_string(a));
      }
      Vertex u = static_cast<Vertex>(a - 1), v = static_cast<Vertex>(b - 1);
      if (u > v) std::swap(u, v);
      edges.push_back({u, v});
    } else {
      throw ParseError(ErrorKind::parse, line_no,
                       "unknown line type '" + std::string(tokens[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(ErrorKind::parse, 0, "missing 'p edge n m' line");
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace detail

inline Graph read_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::edge_list ? detail::read_edge_list(in)
                                          : detail::read_dimacs(in);
}

inline Graph parse_graph(std::string_view text, GraphFormat format) {
  std::istringstream in{std::string(text)};
  return read_graph(in, format);
}

inline Graph load_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open graph file '" + path.string() + "': file not found or unreadable");
  Graph g = read_graph(in, format);
  g.set_name(path.stem().string());
  return g;
}

inline Graph load_graph(const std::filesystem::path& path) {
  return load_graph(path, guess_graph_format(path));
}

/// Edge-list output starts with the "# n N m M" header so that loading it back
/// reproduces the exact labeling, isolated vertices included.
inline void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  const auto edges = g.edges();
  if (format == GraphFormat::edge_list) {
    out << "# n " << g.order() << " m " << g.edge_count() << '\n';
    for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
  } else {
    if (!g.name().empty()) out << "c " << g.name() << '\n';
    out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : edges) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  }
}

inline void save_graph(const Graph& g, const std::filesystem::path& path,
                       GraphFormat format) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write graph file '" + path.string() + "'");
  write_graph(out, g, format);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace cliquelab
