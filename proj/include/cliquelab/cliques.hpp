#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "cliquelab/error.hpp"
#include "cliquelab/graph.hpp"

namespace cliquelab {

/// The family C_t(G): every t-subset of vertices inducing a complete
/// subgraph, as strictly increasing tuples in lexicographic order.
///
/// Tuples are stored back to back in one flat array; clique(k) views the
/// k-th one. per_vertex()[i] counts the t-cliques containing vertex i.
class CliqueSet {
 public:
  CliqueSet() = default;
  CliqueSet(std::size_t t, std::size_t n) : t_(t), per_vertex_(n, 0) {}

  std::size_t t() const noexcept { return t_; }
  std::size_t order() const noexcept { return per_vertex_.size(); }
  std::size_t size() const noexcept { return t_ == 0 ? 0 : members_.size() / t_; }
  bool empty() const noexcept { return members_.empty(); }

  std::span<const Vertex> clique(std::size_t k) const {
    return std::span<const Vertex>(members_).subspan(k * t_, t_);
  }
  std::span<const Vertex> members() const noexcept { return members_; }
  std::span<const std::uint64_t> per_vertex() const noexcept { return per_vertex_; }

  /// Appends a tuple; callers keep the lexicographic order.
  void push(std::span<const Vertex> tuple) {
    members_.insert(members_.end(), tuple.begin(), tuple.end());
    for (Vertex v : tuple) ++per_vertex_[v];
  }

  std::vector<std::vector<Vertex>> to_lists() const {
    std::vector<std::vector<Vertex>> out;
    out.reserve(size());
    for (std::size_t k = 0; k < size(); ++k) {
      auto c = clique(k);
      out.emplace_back(c.begin(), c.end());
    }
    return out;
  }

  /// Vertices lying in at least one clique.
  std::vector<Vertex> covered() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < per_vertex_.size(); ++v)
      if (per_vertex_[v] > 0) out.push_back(v);
    return out;
  }

  bool constant_per_vertex() const {
    return std::adjacent_find(per_vertex_.begin(), per_vertex_.end(),
                              std::not_equal_to<>()) == per_vertex_.end();
  }

 private:
  std::size_t t_ = 0;
  std::vector<Vertex> members_;
  std::vector<std::uint64_t> per_vertex_;
};

namespace detail {

inline void sorted_intersection(std::span<const Vertex> a, std::span<const Vertex> b,
                                std::vector<Vertex>& out) {
  out.clear();
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

// Grows `stack` using only candidates larger than its last vertex, so every
// clique is produced once and in lexicographic order.
template <class Visit>
bool extend_cliques(const Graph& g, std::size_t t, std::vector<Vertex>& stack,
                    std::span<const Vertex> candidates, Visit& visit) {
  if (stack.size() == t) return visit(std::span<const Vertex>(stack));
  std::vector<Vertex> next;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (stack.size() + (candidates.size() - i) < t) break;
    const Vertex v = candidates[i];
    stack.push_back(v);
    sorted_intersection(candidates.subspan(i + 1), g.neighbors(v), next);
    const bool keep_going = extend_cliques(g, t, stack, next, visit);
    stack.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

// Calls visit(tuple) for each t-clique in order; visit returns false to stop.
template <class Visit>
void for_each_clique(const Graph& g, std::size_t t, Visit visit) {
  if (t == 0) throw ParameterError("clique order t must be >= 1");
  std::vector<Vertex> stack;
  stack.reserve(t);
  std::vector<Vertex> candidates;
  for (Vertex root = 0; root < g.order(); ++root) {
    const auto nbrs = g.neighbors(root);
    candidates.assign(std::upper_bound(nbrs.begin(), nbrs.end(), root), nbrs.end());
    stack.push_back(root);
    const bool keep_going = extend_cliques(g, t, stack, candidates, visit);
    stack.pop_back();
    if (!keep_going) return;
  }
}

}  // namespace detail

inline CliqueSet enumerate_cliques(const Graph& g, std::size_t t) {
  CliqueSet out(t, g.order());
  detail::for_each_clique(g, t, [&](std::span<const Vertex> tuple) {
    out.push(tuple);
    return true;
  });
  return out;
}

inline std::uint64_t count_cliques(const Graph& g, std::size_t t) {
  std::uint64_t count = 0;
  detail::for_each_clique(g, t, [&](std::span<const Vertex>) {
    ++count;
    return true;
  });
  return count;
}

inline bool has_clique(const Graph& g, std::size_t k) {
  if (k == 0) return true;
  bool found = false;
  detail::for_each_clique(g, k, [&](std::span<const Vertex>) {
    found = true;
    return false;
  });
  return found;
}

/// True iff G contains no K_{r+1}.
inline bool is_kr1_free(const Graph& g, std::size_t r) {
  if (r < 1) throw ParameterError("is_kr1_free requires r >= 1");
  return !has_clique(g, r + 1);
}

inline constexpr std::uint64_t kDefaultCliqueBudget = 100'000'000;

namespace detail {

// Branch and bound for a maximum clique with greedy-colouring bounds
// (Tomita-style), on bitset rows of the adjacency matrix.
class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const Graph& g, std::uint64_t budget)
      : n_(g.order()), words_((n_ + 63) / 64), budget_(budget) {
    // Search in degree-descending order; colouring then tends to be tighter.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<Vertex> position(n_);
    for (Vertex i = 0; i < n_; ++i) position[order_[i]] = i;
    rows_.assign(n_ * words_, 0);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : g.neighbors(u)) set(row(position[u]), position[v]);
  }

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    best_ = {0};
    std::vector<std::uint64_t> all(words_, 0);
    for (std::size_t i = 0; i < n_; ++i) set(all.data(), i);
    std::vector<Vertex> current;
    expand(current, all);
    std::vector<Vertex> out;
    for (Vertex local : best_) out.push_back(order_[local]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::uint64_t expansions() const noexcept { return expansions_; }

 private:
  std::uint64_t* row(std::size_t v) { return rows_.data() + v * words_; }
  static void set(std::uint64_t* bits, std::size_t i) { bits[i / 64] |= 1ULL << (i % 64); }
  static void reset(std::uint64_t* bits, std::size_t i) { bits[i / 64] &= ~(1ULL << (i % 64)); }

  bool none(const std::vector<std::uint64_t>& bits) const {
    return std::all_of(bits.begin(), bits.end(), [](std::uint64_t w) { return w == 0; });
  }

  static std::size_t first(const std::vector<std::uint64_t>& bits) {
    for (std::size_t w = 0; w < bits.size(); ++w)
      if (bits[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits[w]));
    return bits.size() * 64;
  }

  void expand(std::vector<Vertex>& current, std::vector<std::uint64_t> candidates) {
    if (++expansions_ > budget_) {
      throw BudgetExceeded("clique number search exceeded " + std::to_string(budget_) +
                           " node expansions");
    }
    // Greedy colouring: colour classes are independent sets, so a clique
    // uses at most one vertex per class.
    std::vector<Vertex> verts;
    std::vector<std::size_t> colours;
    std::vector<std::uint64_t> uncoloured = candidates;
    std::vector<std::uint64_t> cls(words_);
    for (std::size_t colour = 1; !none(uncoloured); ++colour) {
      cls = uncoloured;
      while (!none(cls)) {
        const std::size_t v = first(cls);
        reset(cls.data(), v);
        reset(uncoloured.data(), v);
        const std::uint64_t* nv = row(v);
        for (std::size_t w = 0; w < words_; ++w) cls[w] &= ~nv[w];
        verts.push_back(static_cast<Vertex>(v));
        colours.push_back(colour);
      }
    }
    std::vector<std::uint64_t> next(words_);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current.size() + colours[i] <= best_.size()) return;
      const Vertex v = verts[i];
      current.push_back(v);
      const std::uint64_t* nv = row(v);
      for (std::size_t w = 0; w < words_; ++w) next[w] = candidates[w] & nv[w];
      if (none(next)) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, next);
      }
      current.pop_back();
      reset(candidates.data(), v);
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  std::vector<Vertex> order_;
  std::vector<std::uint64_t> rows_;
  std::vector<Vertex> best_;
};

}  // namespace detail

/// A maximum clique, sorted ascending. Throws BudgetExceeded once the search
/// has expanded more than `budget` nodes.
inline std::vector<Vertex> maximum_clique(const Graph& g,
                                          std::uint64_t budget = kDefaultCliqueBudget) {
  return detail::MaxCliqueSearch(g, budget).run();
}

inline std::size_t clique_number(const Graph& g, std::uint64_t budget = kDefaultCliqueBudget) {
  return maximum_clique(g, budget).size();
}

}  // namespace cliquelab
