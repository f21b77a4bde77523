#pragma once

#include <cstdint>
#include <filesystem>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliquelab/error.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/graph_io.hpp"
#include "cliquelab/rng.hpp"

namespace cliquelab {

enum class Family {
  complete,
  cycle,
  path,
  turan,
  multipartite_regular,
  unicyclic_girth3,
  erdos_renyi,
  petersen,
  from_file,
};

inline std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::complete: return "complete";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::turan: return "turan";
    case Family::multipartite_regular: return "multipartite_regular";
    case Family::unicyclic_girth3: return "unicyclic_girth3";
    case Family::erdos_renyi: return "erdos_renyi";
    case Family::petersen: return "petersen";
    case Family::from_file: return "from_file";
  }
  return "unknown";
}

inline Family parse_family(std::string_view name) {
  if (name == "complete") return Family::complete;
  if (name == "cycle") return Family::cycle;
  if (name == "path") return Family::path;
  if (name == "turan") return Family::turan;
  if (name == "multipartite_regular" || name == "multipartite") {
    return Family::multipartite_regular;
  }
  if (name == "unicyclic_girth3" || name == "unicyclic") return Family::unicyclic_girth3;
  if (name == "erdos_renyi" || name == "er" || name == "gnp") return Family::erdos_renyi;
  if (name == "petersen") return Family::petersen;
  if (name == "from_file" || name == "file") return Family::from_file;
  throw ParameterError("unknown graph family '" + std::string(name) + "'");
}

/// Edge probability kept as an exact fraction num/den.
struct Probability {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};

/// Accepts "num/den" or a plain decimal such as "0.35" (read exactly as
/// 35/100, then reduced).
inline Probability parse_probability(std::string_view text) {
  const auto malformed = [&] {
    return ParameterError("malformed probability '" + std::string(text) + "'");
  };
  auto digits = [&](std::string_view s) {
    if (s.empty() || s.size() > 18) throw malformed();
    std::uint64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw malformed();
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
  };
  Probability p;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    p = {digits(text.substr(0, slash)), digits(text.substr(slash + 1))};
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot), frac = text.substr(dot + 1);
    if (!whole.empty() && digits(whole) > 1) throw ParameterError("probability must lie in [0, 1]");
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    p = {(whole.empty() ? 0 : digits(whole)) * den + (frac.empty() ? 0 : digits(frac)), den};
  } else {
    p = {digits(text), 1};
  }
  if (p.den == 0 || p.num > p.den) throw ParameterError("probability must lie in [0, 1]");
  const std::uint64_t g = std::gcd(p.num, p.den);
  return {p.num / g, p.den / g};
}

struct GraphSpec {
  Family family = Family::complete;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t omega = 0;
  std::size_t s = 0;
  Probability p{};
  std::optional<std::uint64_t> seed;
  std::filesystem::path path;
  std::optional<GraphFormat> format;
};

/// Turan part of vertex v: v mod r, so parts with lower index are the larger
/// ones when r does not divide n.
inline std::size_t turan_part(Vertex v, std::size_t r) { return v % r; }

inline std::vector<std::size_t> turan_part_sizes(std::size_t n, std::size_t r) {
  std::vector<std::size_t> sizes(r, n / r);
  for (std::size_t i = 0; i < n % r; ++i) ++sizes[i];
  return sizes;
}

/// Number of edges of T_r(n).
inline std::size_t turan_edge_count(std::size_t n, std::size_t r) {
  std::size_t within = 0;
  for (std::size_t size : turan_part_sizes(n, r)) within += size * (size - (size > 0)) / 2;
  return n * (n - (n > 0)) / 2 - within;
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges, "K" + std::to_string(n));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ParameterError("cycle requires n >= 3");
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph::from_edges(n, edges, "C" + std::to_string(n));
}

inline Graph path_graph(std::size_t n) {
  if (n < 1) throw ParameterError("path requires n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph::from_edges(n, edges, "P" + std::to_string(n));
}

inline Graph turan_graph(std::size_t n, std::size_t r) {
  if (r < 1) throw ParameterError("turan requires r >= 1");
  if (n < r) throw ParameterError("turan requires n >= r");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (turan_part(u, r) != turan_part(v, r)) edges.push_back({u, v});
  return Graph::from_edges(n, edges, "T" + std::to_string(r) + "(" + std::to_string(n) + ")");
}

/// Complete omega-partite graph with every part of size s; vertex v lies in
/// part v mod omega, the same labeling as turan_graph(omega * s, omega).
inline Graph multipartite_regular_graph(std::size_t omega, std::size_t s) {
  if (omega < 1) throw ParameterError("multipartite_regular requires omega >= 1");
  if (s < 1) throw ParameterError("multipartite_regular requires s >= 1");
  Graph g = turan_graph(omega * s, omega);
  g.set_name("K" + std::to_string(omega) + "x" + std::to_string(s));
  return g;
}

/// Triangle {0,1,2} with the path 2-3-...-(n-1) hanging off vertex 2.
inline Graph unicyclic_girth3_graph(std::size_t n) {
  if (n < 3) throw ParameterError("unicyclic_girth3 requires n >= 3");
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}};
  for (Vertex v = 3; v < n; ++v) edges.push_back({v - 1, v});
  return Graph::from_edges(n, edges, "U" + std::to_string(n));
}

/// G(n, p): pairs (u < v) visited in lexicographic order, each kept when
/// rng.below(den) < num.
inline Graph erdos_renyi_graph(std::size_t n, Probability p,
                               std::optional<std::uint64_t> seed) {
  if (p.den == 0 || p.num > p.den) throw ParameterError("erdos_renyi requires 0 <= p <= 1");
  if (!seed) throw ParameterError("erdos_renyi requires an explicit seed");
  Rng rng(*seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.below(p.den) < p.num) edges.push_back({u, v});
  return Graph::from_edges(n, edges,
                           "G(" + std::to_string(n) + "," + std::to_string(p.num) + "/" +
                               std::to_string(p.den) + ")");
}

inline Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, static_cast<Vertex>((i + 1) % 5)});
    edges.push_back({static_cast<Vertex>(i + 5), static_cast<Vertex>((i + 2) % 5 + 5)});
    edges.push_back({i, static_cast<Vertex>(i + 5)});
  }
  for (auto& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  return Graph::from_edges(10, edges, "Petersen");
}

inline Graph generate(const GraphSpec& spec) {
  switch (spec.family) {
    case Family::complete: return complete_graph(spec.n);
    case Family::cycle: return cycle_graph(spec.n);
    case Family::path: return path_graph(spec.n);
    case Family::turan: return turan_graph(spec.n, spec.r);
    case Family::multipartite_regular: return multipartite_regular_graph(spec.omega, spec.s);
    case Family::unicyclic_girth3: return unicyclic_girth3_graph(spec.n);
    case Family::erdos_renyi: return erdos_renyi_graph(spec.n, spec.p, spec.seed);
    case Family::petersen: return petersen_graph();
    case Family::from_file:
      if (spec.path.empty()) throw ParameterError("from_file requires a path");
      return spec.format ? load_graph(spec.path, *spec.format) : load_graph(spec.path);
  }
  throw ParameterError("unknown graph family");
}

}  // namespace cliquelab
