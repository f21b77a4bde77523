#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "cliquelab/cliques.hpp"
#include "cliquelab/generators.hpp"
#include "cliquelab/rng.hpp"
#include "cliquelab/stability.hpp"
#include "support/oracles.hpp"

using namespace cliquelab;

namespace {

void expect_valid_partition(const Graph& g, std::size_t r, const EditDistanceResult& res) {
  ASSERT_EQ(res.partition.size(), g.order());
  std::vector<std::size_t> counts(r, 0);
  for (auto p : res.partition) {
    ASSERT_LT(p, r);
    ++counts[p];
  }
  std::sort(counts.begin(), counts.end());
  auto sizes = turan_part_sizes(g.order(), r);
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(counts, sizes);
  std::uint64_t cost = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if ((res.partition[u] == res.partition[v]) == g.adjacent(u, v)) ++cost;
  EXPECT_EQ(cost, res.distance);
}

}  // namespace

TEST(EditDistance, TuranIsZero) {
  const auto res = edit_distance_to_turan(turan_graph(8, 2), 2);
  EXPECT_EQ(res.distance, 0u);
  EXPECT_TRUE(res.certified);
  EXPECT_EQ(res.method, EditMethod::exact);
}

TEST(EditDistance, K4ToBipartite) {
  const Graph g = complete_graph(4);
  const auto res = edit_distance_to_turan(g, 2);
  EXPECT_EQ(res.distance, 2u);
  EXPECT_EQ(oracle::edit_distance(g, 2), 2u);
  expect_valid_partition(g, 2, res);
}

TEST(EditDistance, C5MatchesEnumeration) {
  const Graph g = cycle_graph(5);
  const auto res = edit_distance_to_turan(g, 2);
  EXPECT_EQ(res.distance, oracle::edit_distance(g, 2));
  expect_valid_partition(g, 2, res);
}

TEST(EditDistance, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 4 + seed % 6;
    const Graph g = erdos_renyi_graph(n, {1, 2}, seed);
    for (std::size_t r = 1; r <= std::min<std::size_t>(n, 4); ++r) {
      const auto res = edit_distance_to_turan(g, r);
      EXPECT_EQ(res.distance, oracle::edit_distance(g, r)) << n << " " << r << " " << seed;
      expect_valid_partition(g, r, res);
    }
  }
}

TEST(EditDistance, TuranZeroUpTo24) {
  for (std::size_t n = 1; n <= 24; ++n) {
    for (std::size_t r = 1; r <= std::min<std::size_t>(n, 4); ++r) {
      EditOptions opts;
      opts.seed = n;
      const auto res = edit_distance_to_turan(turan_graph(n, r), r, opts);
      EXPECT_EQ(res.distance, 0u) << n << " " << r;
      EXPECT_EQ(res.certified, n <= kExactEditCutoff);
    }
  }
}

TEST(EditDistance, RelabelInvariant) {
  Rng rng(4);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = perturb_turan(11, 3, 0.25, seed);
    const auto base = edit_distance_to_turan(g, 3).distance;
    for (int k = 0; k < 5; ++k) {
      std::vector<Vertex> perm(g.order());
      std::iota(perm.begin(), perm.end(), Vertex{0});
      rng.shuffle(perm);
      EXPECT_EQ(edit_distance_to_turan(g.relabeled(perm), 3).distance, base);
    }
  }
}

TEST(EditDistance, LocalSearchNeverBeatsExact) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 6 + seed % 8;
    const Graph g = seed % 2 ? erdos_renyi_graph(n, {1, 2}, seed) : perturb_turan(n, 3, 0.3, seed);
    for (std::size_t r = 2; r <= 3; ++r) {
      const auto exact = edit_distance_to_turan(g, r);
      EditOptions opts;
      opts.strategy = EditStrategy::local_search;
      opts.seed = seed;
      const auto local = edit_distance_to_turan(g, r, opts);
      EXPECT_GE(local.distance, exact.distance);
      EXPECT_FALSE(local.certified);
      EXPECT_EQ(local.method, EditMethod::local_search);
      expect_valid_partition(g, r, local);
    }
  }
}

TEST(EditDistance, LocalSearchIsSeedDeterministic) {
  const Graph g = perturb_turan(30, 3, 0.2, 9);
  EditOptions opts;
  opts.seed = 77;
  const auto a = edit_distance_to_turan(g, 3, opts);
  const auto b = edit_distance_to_turan(g, 3, opts);
  EXPECT_EQ(a.distance, b.distance);
  EXPECT_EQ(a.partition, b.partition);
  EXPECT_LE(a.distance, 2 * 90u);
}

TEST(EditDistance, Preconditions) {
  EXPECT_THROW(edit_distance_to_turan(complete_graph(3), 0), ParameterError);
  EXPECT_THROW(edit_distance_to_turan(complete_graph(3), 4), ParameterError);
}

TEST(PerturbTuran, Examples) {
  EXPECT_EQ(perturb_turan(9, 3, 0.0, 5).edges(), turan_graph(9, 3).edges());
  EXPECT_EQ(perturb_turan(9, 3, 1.0, 5).edge_count(), 0u);
  const Graph g = perturb_turan(12, 3, 0.1, 1);
  EXPECT_EQ(g.edge_count(), 44u);
  EXPECT_TRUE(is_kr1_free(g, 3));
  EXPECT_THROW(perturb_turan(9, 3, 1.5, 5), ParameterError);
  EXPECT_THROW(perturb_turan(9, 3, -0.1, 5), ParameterError);
}

TEST(PerturbTuran, AlwaysKr1FreeSubgraph) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t r = 2 + seed % 4;
    const std::size_t n = r + seed % 15;
    const double f = static_cast<double>(seed % 11) / 10.0;
    const Graph g = perturb_turan(n, r, f, seed);
    const Graph t = turan_graph(n, r);
    EXPECT_TRUE(is_kr1_free(g, r));
    for (const Edge& e : g.edges()) EXPECT_TRUE(t.adjacent(e.u, e.v));
    EXPECT_EQ(g.edge_count(),
              t.edge_count() - static_cast<std::size_t>(std::floor(f * t.edge_count() + 1e-9)));
    EXPECT_EQ(perturb_turan(n, r, f, seed).edges(), g.edges());
  }
}

TEST(Spearman, Basics) {
  const std::vector<double> x{1, 2, 3, 4, 5};
  const std::vector<double> up{2, 4, 6, 8, 10};
  const std::vector<double> down{5, 4, 3, 2, 1};
  EXPECT_DOUBLE_EQ(spearman(x, up), 1.0);
  EXPECT_DOUBLE_EQ(spearman(x, down), -1.0);
  EXPECT_EQ(spearman(x, std::vector<double>(5, 1.0)), 0.0);
  const auto ranks = average_ranks(std::vector<double>{10, 20, 20, 5});
  EXPECT_EQ(ranks, (std::vector<double>{2, 3.5, 3.5, 1}));
}

TEST(Spearman, MatchesPearsonOnRanksWithTies) {
  // Hand-computed: ranks x = (1,2.5,2.5,4), y = (1,2,3,4).
  const std::vector<double> x{1, 2, 2, 3}, y{1, 2, 3, 4};
  const double mx = 2.5, my = 2.5;
  const double rx[] = {1, 2.5, 2.5, 4}, ry[] = {1, 2, 3, 4};
  double sxy = 0, sxx = 0, syy = 0;
  for (int i = 0; i < 4; ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  EXPECT_NEAR(spearman(x, y), sxy / std::sqrt(sxx * syy), 1e-15);
}

TEST(Sweep, FractionZeroAndOne) {
  SweepConfig cfg;
  cfg.n = {9, 12};
  cfg.r = 3;
  cfg.t = 2;
  cfg.fractions = {0.0, 1.0};
  cfg.seeds = {1, 2};
  const auto records = stability_sweep(cfg);
  ASSERT_EQ(records.size(), 8u);
  for (const auto& rec : records) {
    if (rec.fraction == 0.0) {
      EXPECT_EQ(rec.edit_distance, 0u);
      EXPECT_NEAR(rec.rho_deficit, 0.0, 1e-9);
      EXPECT_NEAR(rec.rho_t, 2.0 * rec.n / 3.0, 1e-8);
    } else {
      EXPECT_EQ(rec.rho_t, 0.0);
      EXPECT_EQ(rec.edit_distance, turan_edge_count(rec.n, 3));
    }
  }
}

TEST(Sweep, OrderAndDeterminism) {
  SweepConfig cfg;
  cfg.n = {10, 8};
  cfg.r = 3;
  cfg.t = 3;
  cfg.fractions = {0.3, 0.1};
  cfg.seeds = {5, 4};
  const auto a = stability_sweep(cfg);
  const auto b = stability_sweep(cfg);
  ASSERT_EQ(a.size(), 8u);
  EXPECT_EQ(a[0].n, 10u);
  EXPECT_EQ(a[0].fraction, 0.3);
  EXPECT_EQ(a[0].seed, 5u);
  EXPECT_EQ(a[1].seed, 4u);
  EXPECT_EQ(a[2].fraction, 0.1);
  EXPECT_EQ(a[4].n, 8u);
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].rho_t, b[k].rho_t);
    EXPECT_EQ(a[k].edit_distance, b[k].edit_distance);
    EXPECT_DOUBLE_EQ(a[k].edit_density,
                     static_cast<double>(a[k].edit_distance) / static_cast<double>(a[k].n * a[k].n));
  }
}

TEST(Sweep, Preconditions) {
  SweepConfig cfg;
  cfg.n = {6};
  cfg.r = 2;
  cfg.t = 3;
  cfg.fractions = {0.0};
  cfg.seeds = {1};
  EXPECT_THROW(stability_sweep(cfg), PreconditionError);
  cfg.t = 1;
  EXPECT_THROW(stability_sweep(cfg), PreconditionError);
  cfg.t = 2;
  cfg.fractions = {2.0};
  EXPECT_THROW(stability_sweep(cfg), ParameterError);
}
