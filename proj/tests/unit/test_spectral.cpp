#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "cliquelab/cliques.hpp"
#include "cliquelab/generators.hpp"
#include "cliquelab/rng.hpp"
#include "cliquelab/spectral.hpp"
#include "support/oracles.hpp"

using namespace cliquelab;

namespace {

std::vector<Graph> families_up_to(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    out.push_back(complete_graph(n));
    out.push_back(path_graph(n));
    if (n >= 3) out.push_back(cycle_graph(n));
    if (n >= 3) out.push_back(unicyclic_girth3_graph(n));
    for (std::size_t r = 2; r <= std::min<std::size_t>(n, 4); ++r) out.push_back(turan_graph(n, r));
    out.push_back(erdos_renyi_graph(n, {1, 2}, 100 + n));
    out.push_back(erdos_renyi_graph(n, {7, 10}, 200 + n));
  }
  for (std::size_t w = 2; w <= 4; ++w)
    for (std::size_t s = 1; s <= 3; ++s)
      if (w * s <= max_n) out.push_back(multipartite_regular_graph(w, s));
  if (max_n >= 10) out.push_back(petersen_graph());
  return out;
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(ApplyTensor, SingleTriangle) {
  const auto cs = enumerate_cliques(complete_graph(3), 3);
  const std::vector<double> x{0.2, 0.3, 0.7};
  const auto y = apply_clique_tensor(cs, x);
  EXPECT_DOUBLE_EQ(y[0], 0.3 * 0.7);
  EXPECT_DOUBLE_EQ(y[1], 0.2 * 0.7);
  EXPECT_DOUBLE_EQ(y[2], 0.2 * 0.3);
}

TEST(ApplyTensor, K4AllOnes) {
  const auto cs = enumerate_cliques(complete_graph(4), 3);
  const auto y = apply_clique_tensor(cs, std::vector<double>(4, 1.0));
  for (double v : y) EXPECT_DOUBLE_EQ(v, 3.0);
}

TEST(ApplyTensor, Octahedron) {
  const auto cs = enumerate_cliques(multipartite_regular_graph(3, 2), 3);
  const auto x = WeightVector::uniform_t_norm(6, 3);
  for (double v : x.values) EXPECT_NEAR(v, std::cbrt(1.0 / 6.0), 1e-15);
  const auto y = apply_clique_tensor(cs, x);
  for (double v : y) EXPECT_NEAR(v, 4.0 * std::pow(1.0 / 6.0, 2.0 / 3.0), 1e-14);
}

TEST(ApplyTensor, Errors) {
  const auto cs = enumerate_cliques(complete_graph(3), 2);
  EXPECT_THROW(apply_clique_tensor(cs, std::vector<double>{1.0, 1.0}), ParameterError);
  EXPECT_THROW(apply_clique_tensor(cs, std::vector<double>{1.0, -1.0, 1.0}), ParameterError);
}

TEST(Rayleigh, Examples) {
  const auto k3 = enumerate_cliques(complete_graph(3), 3);
  EXPECT_NEAR(rayleigh_value(k3, WeightVector::uniform_t_norm(3, 3)), 1.0, 1e-14);
  const auto c5 = enumerate_cliques(cycle_graph(5), 3);
  EXPECT_EQ(rayleigh_value(c5, WeightVector::uniform_t_norm(5, 3)), 0.0);
  const auto oct = enumerate_cliques(multipartite_regular_graph(3, 2), 2);
  EXPECT_NEAR(rayleigh_value(oct, WeightVector::uniform_t_norm(6, 2)), 4.0, 1e-14);
}

TEST(Rayleigh, RejectsWrongNormalization) {
  const auto k3 = enumerate_cliques(complete_graph(3), 3);
  EXPECT_THROW(rayleigh_value(k3, WeightVector::uniform_simplex(3)), ParameterError);
  EXPECT_THROW(rayleigh_value(k3, WeightVector::uniform_t_norm(3, 2)), ParameterError);
  WeightVector bad{{1.0, 1.0, 1.0}, Normalization::t_norm, 3};
  EXPECT_THROW(rayleigh_value(k3, bad), ParameterError);
}

TEST(Rayleigh, LowerBoundsRho) {
  Rng rng(3);
  for (const Graph& g : families_up_to(9)) {
    for (std::size_t t = 2; t <= 3; ++t) {
      const auto cs = enumerate_cliques(g, t);
      const double rho = rho_power_iteration(cs).rho;
      for (int k = 0; k < 10; ++k) {
        std::vector<double> x(g.order());
        for (double& v : x) v = rng.unit();
        const auto w = WeightVector::on_t_sphere(x, t);
        EXPECT_LE(rayleigh_value(cs, w), rho + kResidualTolerance * std::max(1.0, rho));
      }
    }
  }
}

TEST(PowerIteration, UnicyclicIsOne) {
  for (std::size_t n = 3; n <= 20; ++n) {
    const auto res = rho_power_iteration(enumerate_cliques(unicyclic_girth3_graph(n), 3));
    EXPECT_NEAR(res.rho, 1.0, 1e-9) << n;
  }
}

TEST(PowerIteration, Examples) {
  EXPECT_NEAR(rho_power_iteration(enumerate_cliques(multipartite_regular_graph(3, 3), 3)).rho, 9.0, 1e-8);
  EXPECT_NEAR(rho_power_iteration(enumerate_cliques(complete_graph(4), 3)).rho, 3.0, 1e-8);
}

TEST(PowerIteration, CliqueFreeIsExactlyZero) {
  const auto res = rho_power_iteration(enumerate_cliques(cycle_graph(7), 3));
  EXPECT_EQ(res.rho, 0.0);
  EXPECT_EQ(res.lower, 0.0);
  EXPECT_EQ(res.upper, 0.0);
  EXPECT_TRUE(res.converged);
  EXPECT_EQ(rho_power_iteration(enumerate_cliques(Graph(4), 2)).rho, 0.0);
}

TEST(PowerIteration, Preconditions) {
  EXPECT_THROW(rho_power_iteration(enumerate_cliques(complete_graph(3), 1)), ParameterError);
  EXPECT_THROW(rho_gradient_ascent(enumerate_cliques(complete_graph(3), 1)), ParameterError);
}

TEST(PowerIteration, NonConvergenceCarriesBracket) {
  PowerOptions opts;
  opts.max_iter = 2;
  try {
    rho_power_iteration(enumerate_cliques(unicyclic_girth3_graph(9), 2), opts);
    FAIL() << "expected non-convergence";
  } catch (const ConvergenceError& e) {
    EXPECT_LT(e.lower(), e.upper());
    EXPECT_EQ(e.iterations(), 2u);
    EXPECT_TRUE(is_computation_error(e.kind()));
  }
}

TEST(PowerIteration, BracketAndResidual) {
  for (const Graph& g : families_up_to(12)) {
    for (std::size_t t = 2; t <= 4; ++t) {
      const auto cs = enumerate_cliques(g, t);
      const auto res = rho_power_iteration(cs);
      EXPECT_LE(res.lower, res.rho) << g.name();
      EXPECT_LE(res.rho, res.upper) << g.name();
      EXPECT_LE(res.upper - res.lower, 1e-10 * std::max(1.0, res.rho)) << g.name();
      EXPECT_LE(res.residual, kResidualTolerance * std::max(1.0, res.rho)) << g.name() << " t=" << t;
      EXPECT_LE(eigenpair_residual(cs, res.eigvec.values, res.rho),
                kResidualTolerance * std::max(1.0, res.rho));
      EXPECT_TRUE(res.eigvec.feasible()) << g.name();
    }
  }
}

TEST(PowerIteration, ConstantPerVertexGivesAverage) {
  std::vector<Graph> regular{complete_graph(5), complete_graph(7), turan_graph(9, 3),
                             turan_graph(12, 4), multipartite_regular_graph(4, 2),
                             cycle_graph(8), petersen_graph()};
  for (const Graph& g : regular) {
    for (std::size_t t = 2; t <= 4; ++t) {
      const auto cs = enumerate_cliques(g, t);
      if (!cs.constant_per_vertex()) continue;
      const double expected = static_cast<double>(t * cs.size()) / static_cast<double>(g.order());
      EXPECT_NEAR(rho_power_iteration(cs).rho, expected, 1e-9 * std::max(1.0, expected));
    }
  }
}

TEST(PowerIteration, AdjacencyReduction) {
  for (const Graph& g : families_up_to(30)) {
    const double rho = rho_power_iteration(enumerate_cliques(g, 2)).rho;
    EXPECT_NEAR(rho, oracle::adjacency_spectral_radius(g), 1e-8) << g.name();
  }
}

TEST(PowerIteration, DenseMatrixPowerMethodAgrees) {
  for (const Graph& g : {multipartite_regular_graph(3, 2), unicyclic_girth3_graph(7), path_graph(3),
                         petersen_graph(), erdos_renyi_graph(20, {1, 3}, 5)}) {
    EXPECT_NEAR(rho_power_iteration(enumerate_cliques(g, 2)).rho, oracle::adjacency_power_method(g),
                1e-8)
        << g.name();
  }
}

TEST(PowerIteration, MonotoneUnderEdgeAddition) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Rng rng(seed);
    const std::size_t n = 9;
    std::vector<Edge> edges;
    double previous[3] = {0.0, 0.0, 0.0};
    std::vector<Edge> all;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
    rng.shuffle(all);
    for (const Edge& e : all) {
      edges.push_back(e);
      const Graph g = Graph::from_edges(n, edges);
      for (std::size_t t = 2; t <= 4; ++t) {
        const double rho = rho_power_iteration(enumerate_cliques(g, t)).rho;
        EXPECT_GE(rho, previous[t - 2] - 1e-9 * std::max(1.0, rho));
        previous[t - 2] = rho;
      }
    }
  }
}

TEST(Components, SplitByCliqueHypergraph) {
  // Two triangles sharing no vertex plus an isolated edge.
  const Graph g = Graph::from_edges(8, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {6, 7}});
  const auto comps = clique_components(enumerate_cliques(g, 3));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(comps[1].vertices, (std::vector<Vertex>{3, 4, 5}));
}

TEST(GradientAscent, Examples) {
  GradientOptions opts;
  opts.seed = 1;
  EXPECT_NEAR(rho_gradient_ascent(enumerate_cliques(complete_graph(3), 3), opts).rho, 1.0, 1e-6);
  EXPECT_EQ(rho_gradient_ascent(enumerate_cliques(cycle_graph(5), 3), opts).rho, 0.0);
  const Graph oct = multipartite_regular_graph(3, 2);
  const auto res = rho_gradient_ascent(enumerate_cliques(oct, 2), opts);
  EXPECT_NEAR(res.rho, 4.0, 1e-6);
  EXPECT_NEAR(res.rho, oracle::adjacency_spectral_radius(oct), 1e-6);
  EXPECT_TRUE(std::isinf(res.upper));
  EXPECT_EQ(res.lower, res.rho);
}

TEST(GradientAscent, SeedDeterminism) {
  GradientOptions opts;
  opts.seed = 42;
  const auto cs = enumerate_cliques(erdos_renyi_graph(12, {1, 2}, 3), 3);
  const auto a = rho_gradient_ascent(cs, opts);
  const auto b = rho_gradient_ascent(cs, opts);
  EXPECT_EQ(a.rho, b.rho);
  EXPECT_EQ(a.eigvec.values, b.eigvec.values);
}

TEST(Oracle, Examples) {
  EXPECT_NEAR(oracle_rho_bruteforce(enumerate_cliques(complete_graph(3), 3)).value, 1.0, 1e-4);
  EXPECT_NEAR(oracle_rho_bruteforce(enumerate_cliques(complete_graph(3), 2)).value, 2.0, 1e-4);
  EXPECT_NEAR(oracle_rho_bruteforce(enumerate_cliques(path_graph(3), 2)).value, std::sqrt(2.0), 1e-4);
  EXPECT_THROW(oracle_rho_bruteforce(enumerate_cliques(complete_graph(9), 2)), ParameterError);
}

TEST(Oracle, CertificateBrackets) {
  for (const Graph& g : families_up_to(8)) {
    for (std::size_t t = 2; t <= 3; ++t) {
      const auto cs = enumerate_cliques(g, t);
      const auto res = oracle_rho_bruteforce(cs);
      const double rho = rho_power_iteration(cs).rho;
      EXPECT_LE(res.value, rho + 1e-9 * std::max(1.0, rho)) << g.name();
      EXPECT_GE(res.upper, rho - 1e-9 * std::max(1.0, rho)) << g.name();
    }
  }
}

TEST(MethodAgreement, SmallFamilies) {
  GradientOptions opts;
  opts.seed = 7;
  for (const Graph& g : families_up_to(8)) {
    for (std::size_t t = 2; t <= 4; ++t) {
      const auto cs = enumerate_cliques(g, t);
      const double power = rho_power_iteration(cs).rho;
      const auto grad = rho_gradient_ascent(cs, opts);
      EXPECT_LE(relative_gap(grad.rho, power), 1e-6) << g.name() << " t=" << t;
      if (grad.converged) {
        EXPECT_LE(grad.residual, kResidualTolerance * std::max(1.0, grad.rho)) << g.name();
      }
      EXPECT_LE(std::abs(oracle_rho_bruteforce(cs).value - power), 2e-4) << g.name() << " t=" << t;
    }
  }
}
