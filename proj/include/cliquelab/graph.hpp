#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cliquelab/error.hpp"

namespace cliquelab {

using Vertex = std::uint32_t;

/// Unordered pair stored with first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1, immutable once built.
///
/// Neighbor lists are sorted ascending so that clique enumeration can
/// intersect them in order.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n, std::string name = {})
      : adjacency_(n), name_(std::move(name)) {}

  /// Builds a graph from an edge list. Duplicate pairs (in either
  /// orientation) collapse; self-loops and out-of-range endpoints throw.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::string name = {}) {
    Graph g(n, std::move(name));
    for (const Edge& e : edges) {
      if (e.u == e.v) {
        throw ParameterError("self-loop at vertex " + std::to_string(e.u));
      }
      if (e.u >= n || e.v >= n) {
        throw ParameterError("edge (" + std::to_string(e.u) + "," +
                             std::to_string(e.v) + ") has an endpoint outside [0," +
                             std::to_string(n) + ")");
      }
      g.adjacency_[e.u].push_back(e.v);
      g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : g.adjacency_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      g.edge_count_ += list.size();
    }
    g.edge_count_ /= 2;
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges,
                          std::string name = {}) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()),
                      std::move(name));
  }

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& list = adjacency_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
  }

  /// All edges as (u < v) pairs in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  /// Same edge relation under the map v -> perm[v].
  Graph relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != order()) throw ParameterError("permutation size mismatch");
    std::vector<Edge> mapped;
    mapped.reserve(edge_count_);
    for (const Edge& e : edges()) {
      Vertex a = perm[e.u], b = perm[e.v];
      if (a > b) std::swap(a, b);
      mapped.push_back({a, b});
    }
    return from_edges(order(), mapped, name_);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
  std::string name_;
};

}  // namespace cliquelab
