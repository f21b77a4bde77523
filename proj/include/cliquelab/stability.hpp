#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "cliquelab/cliques.hpp"
#include "cliquelab/combinatorics.hpp"
#include "cliquelab/error.hpp"
#include "cliquelab/generators.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/parallel.hpp"
#include "cliquelab/rng.hpp"
#include "cliquelab/spectral.hpp"

namespace cliquelab {

enum class EditMethod { exact, local_search };

inline std::string_view to_string(EditMethod m) noexcept {
  return m == EditMethod::exact ? "exact" : "local_search";
}

struct EditDistanceResult {
  std::uint64_t distance = 0;
  std::vector<std::size_t> partition;  // part index per vertex
  EditMethod method = EditMethod::exact;
  bool certified = true;
};

enum class EditStrategy { automatic, exact, local_search };

/// Largest n solved by exhaustive search under EditStrategy::automatic.
inline constexpr std::size_t kExactEditCutoff = 13;

struct EditOptions {
  EditStrategy strategy = EditStrategy::automatic;
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
};

namespace detail {

/// Edges inside parts for a given assignment.
inline std::uint64_t within_part_edges(const Graph& g, std::span<const std::size_t> part) {
  std::uint64_t within = 0;
  for (const Edge& e : g.edges())
    if (part[e.u] == part[e.v]) ++within;
  return within;
}

/// Branch and bound over assignments with Turán part sizes. Vertices are
/// placed in index order; an empty part may only be opened if it is the
/// first empty one among the parts of the same capacity, so each partition
/// is visited once up to relabeling of equal parts.
class ExactEditSearch {
 public:
  ExactEditSearch(const Graph& g, std::size_t r)
      : g_(g), capacity_(turan_part_sizes(g.order(), r)), fill_(r, 0),
        part_(g.order(), 0), best_part_(g.order(), 0) {}

  std::uint64_t run() {
    best_within_ = std::numeric_limits<std::uint64_t>::max();
    place(0, 0);
    return best_within_;
  }

  const std::vector<std::size_t>& best_partition() const { return best_part_; }

 private:
  void place(Vertex v, std::uint64_t within) {
    if (within >= best_within_) return;
    if (v == g_.order()) {
      best_within_ = within;
      best_part_ = part_;
      return;
    }
    const std::size_t r = capacity_.size();
    for (std::size_t p = 0; p < r; ++p) {
      if (fill_[p] == capacity_[p]) continue;
      if (fill_[p] == 0 && !first_empty_of_capacity(p)) continue;
      std::uint64_t added = 0;
      for (Vertex u : g_.neighbors(v)) {
        if (u >= v) break;
        if (part_[u] == p) ++added;
      }
      part_[v] = p;
      ++fill_[p];
      place(v + 1, within + added);
      --fill_[p];
    }
  }

  bool first_empty_of_capacity(std::size_t p) const {
    for (std::size_t q = 0; q < p; ++q)
      if (fill_[q] == 0 && capacity_[q] == capacity_[p]) return false;
    return true;
  }

  const Graph& g_;
  std::vector<std::size_t> capacity_, fill_, part_, best_part_;
  std::uint64_t best_within_ = 0;
};

/// One Kernighan-Lin run from a random Turán-sized assignment. Each pass
/// swaps the best unlocked cross-part pair (even at a loss), locks both,
/// and keeps the best prefix of the pass; passes repeat while they improve.
inline std::vector<std::size_t> kernighan_lin(const Graph& g, std::size_t r, Rng& rng) {
  const std::size_t n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  rng.shuffle(order);
  std::vector<std::size_t> part(n);
  for (std::size_t k = 0; k < n; ++k) part[order[k]] = turan_part(static_cast<Vertex>(k), r);

  // links[v * r + p]: neighbors of v in part p.
  std::vector<std::int64_t> links(n * r, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) ++links[v * r + part[u]];
  auto move = [&](Vertex v, std::size_t to) {
    for (Vertex u : g.neighbors(v)) {
      --links[u * r + part[v]];
      ++links[u * r + to];
    }
    part[v] = to;
  };
  // Reduction in within-part edges when u and v trade parts.
  auto gain = [&](Vertex u, Vertex v) {
    const std::size_t a = part[u], b = part[v];
    const std::int64_t adj = g.adjacent(u, v) ? 1 : 0;
    return links[u * r + a] + links[v * r + b] - links[u * r + b] - links[v * r + a] + 2 * adj;
  };

  for (;;) {
    std::vector<char> locked(n, 0);
    std::vector<std::pair<Vertex, Vertex>> swaps;
    std::int64_t total = 0, best_total = 0;
    std::size_t best_prefix = 0;
    for (;;) {
      std::int64_t best_gain = std::numeric_limits<std::int64_t>::min();
      Vertex bu = 0, bv = 0;
      for (Vertex u = 0; u < n; ++u) {
        if (locked[u]) continue;
        for (Vertex v = u + 1; v < n; ++v) {
          if (locked[v] || part[u] == part[v]) continue;
          const std::int64_t gv = gain(u, v);
          if (gv > best_gain) {
            best_gain = gv;
            bu = u;
            bv = v;
          }
        }
      }
      if (best_gain == std::numeric_limits<std::int64_t>::min()) break;
      const std::size_t a = part[bu], b = part[bv];
      move(bu, b);
      move(bv, a);
      locked[bu] = locked[bv] = 1;
      swaps.emplace_back(bu, bv);
      total += best_gain;
      if (total > best_total) {
        best_total = total;
        best_prefix = swaps.size();
      }
    }
    for (std::size_t k = swaps.size(); k > best_prefix; --k) {
      const auto [u, v] = swaps[k - 1];
      const std::size_t a = part[u], b = part[v];
      move(u, b);
      move(v, a);
    }
    if (best_total <= 0) break;
  }
  return part;
}

}  // namespace detail

/// Minimum number of edge additions plus deletions turning g into T_r(n),
/// over all vertex-to-part assignments with Turán part sizes. For an
/// assignment with w edges inside parts the cost is |E(T_r(n))| - |E| + 2w,
/// so the search minimizes w. Exhaustive (certified) for n <= 13 or when
/// forced; otherwise the best of opts.restarts Kernighan-Lin runs, an upper
/// bound on the minimum.
inline EditDistanceResult edit_distance_to_turan(const Graph& g, std::size_t r,
                                                 const EditOptions& opts = {}) {
  const std::size_t n = g.order();
  if (r < 1) throw ParameterError("edit distance requires r >= 1");
  if (r > n) throw ParameterError("edit distance requires r <= n (r=" + std::to_string(r) +
                                  ", n=" + std::to_string(n) + ")");
  const bool exact = opts.strategy == EditStrategy::exact ||
                     (opts.strategy == EditStrategy::automatic && n <= kExactEditCutoff);
  EditDistanceResult out;
  std::uint64_t within = 0;
  if (exact) {
    detail::ExactEditSearch search(g, r);
    within = search.run();
    out.partition = search.best_partition();
    out.method = EditMethod::exact;
    out.certified = true;
  } else {
    if (opts.restarts < 1) throw ParameterError("local search requires restarts >= 1");
    std::vector<std::vector<std::size_t>> runs(opts.restarts);
    parallel_for(opts.restarts, [&](std::size_t k) {
      Rng rng(Rng::derive(opts.seed, k));
      runs[k] = detail::kernighan_lin(g, r, rng);
    });
    within = std::numeric_limits<std::uint64_t>::max();
    for (auto& run : runs) {
      const std::uint64_t w = detail::within_part_edges(g, run);
      if (w < within) {
        within = w;
        out.partition = std::move(run);
      }
    }
    out.method = EditMethod::local_search;
    out.certified = false;
  }
  out.distance = turan_edge_count(n, r) - g.edge_count() + 2 * within;
  return out;
}

/// T_r(n) minus floor(fraction * |E| + 1e-9) edges drawn uniformly without
/// replacement: the lexicographic edge list is shuffled with Rng(seed) and
/// its first entries are removed.
inline Graph perturb_turan(std::size_t n, std::size_t r, double delete_fraction,
                           std::uint64_t seed) {
  if (!(delete_fraction >= 0.0 && delete_fraction <= 1.0)) {
    throw ParameterError("delete fraction must lie in [0, 1]");
  }
  const Graph base = turan_graph(n, r);
  std::vector<Edge> edges = base.edges();
  const auto remove = static_cast<std::size_t>(
      std::floor(delete_fraction * static_cast<double>(edges.size()) + 1e-9));
  Rng rng(seed);
  rng.shuffle(edges);
  std::vector<Edge> kept(edges.begin() + static_cast<std::ptrdiff_t>(remove), edges.end());
  return Graph::from_edges(n, kept, "perturbed_T" + std::to_string(r) + "_" + std::to_string(n));
}

struct SweepConfig {
  std::vector<std::size_t> n;
  std::size_t r = 2;
  std::size_t t = 2;
  std::vector<double> fractions;
  std::vector<std::uint64_t> seeds;
};

struct SweepRecord {
  std::size_t n = 0, r = 0, t = 0;
  double fraction = 0.0;
  std::uint64_t seed = 0;
  double rho_t = 0.0;
  double rho_deficit = 0.0;  // C(r-1,t-1) r^{1-t} - rho_t / n^{t-1}
  std::uint64_t edit_distance = 0;
  double edit_density = 0.0;  // edit_distance / n^2
  bool certified = true;
  bool converged = true;  // false: power iteration failed, rho_t from gradient ascent
};

/// Normalized Turán value C(r-1, t-1) (1/r)^{t-1}.
inline double turan_rho_density(std::size_t r, std::size_t t) {
  return binomial(r - 1, t - 1) * std::pow(1.0 / static_cast<double>(r), static_cast<double>(t - 1));
}

inline SweepRecord sweep_record(std::size_t n, std::size_t r, std::size_t t, double fraction,
                                std::uint64_t seed) {
  SweepRecord rec{.n = n, .r = r, .t = t, .fraction = fraction, .seed = seed};
  const Graph g = perturb_turan(n, r, fraction, seed);
  const auto cs = enumerate_cliques(g, t);
  try {
    rec.rho_t = rho_power_iteration(cs).rho;
  } catch (const ConvergenceError&) {
    GradientOptions gopts;
    gopts.seed = seed;
    rec.rho_t = rho_gradient_ascent(cs, gopts).rho;
    rec.converged = false;
  }
  const double scale = std::pow(static_cast<double>(n), static_cast<double>(t - 1));
  rec.rho_deficit = turan_rho_density(r, t) - rec.rho_t / scale;
  EditOptions eopts;
  eopts.seed = seed;
  const auto ed = edit_distance_to_turan(g, r, eopts);
  rec.edit_distance = ed.distance;
  rec.edit_density = static_cast<double>(ed.distance) / static_cast<double>(n * n);
  rec.certified = ed.certified;
  return rec;
}

/// One record per (n, fraction, seed), in that lexicographic order of the
/// config lists; records are computed in parallel.
inline std::vector<SweepRecord> stability_sweep(const SweepConfig& cfg) {
  if (!(cfg.t >= 2 && cfg.r + 1 > cfg.t)) {
    throw PreconditionError("stability sweep requires r + 1 > t >= 2 (r=" +
                            std::to_string(cfg.r) + ", t=" + std::to_string(cfg.t) + ")");
  }
  for (std::size_t n : cfg.n) {
    if (n < cfg.r) throw ParameterError("sweep requires every n >= r");
  }
  for (double f : cfg.fractions) {
    if (!(f >= 0.0 && f <= 1.0)) throw ParameterError("sweep fractions must lie in [0, 1]");
  }
  struct Job {
    std::size_t n;
    double fraction;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (std::size_t n : cfg.n)
    for (double f : cfg.fractions)
      for (std::uint64_t s : cfg.seeds) jobs.push_back({n, f, s});
  std::vector<SweepRecord> records(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t k) {
    records[k] = sweep_record(jobs[k].n, cfg.r, cfg.t, jobs[k].fraction, jobs[k].seed);
  });
  return records;
}

/// Ranks starting at 1; tied values share the mean of their ranks.
inline std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> idx(values.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && values[idx[j + 1]] == values[idx[i]]) ++j;
    const double mean = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = mean;
    i = j + 1;
  }
  return ranks;
}

/// Spearman rank correlation (Pearson correlation of average ranks). Zero
/// when either side is constant.
inline double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ParameterError("spearman needs equal-length samples");
  if (x.size() < 2) return 0.0;
  const auto rx = average_ranks(x), ry = average_ranks(y);
  const double m = (static_cast<double>(x.size()) + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - m) * (ry[i] - m);
    sxx += (rx[i] - m) * (rx[i] - m);
    syy += (ry[i] - m) * (ry[i] - m);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

inline double sweep_spearman(std::span<const SweepRecord> records) {
  std::vector<double> deficit, density;
  for (const auto& rec : records) {
    deficit.push_back(rec.rho_deficit);
    density.push_back(rec.edit_density);
  }
  return spearman(deficit, density);
}

}  // namespace cliquelab
