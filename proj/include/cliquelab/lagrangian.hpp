#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cliquelab/cliques.hpp"
#include "cliquelab/combinatorics.hpp"
#include "cliquelab/error.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/parallel.hpp"
#include "cliquelab/rng.hpp"
#include "cliquelab/spectral.hpp"

namespace cliquelab {

enum class LagrangianMethod { closed_form, gradient, shift_local };

inline std::string_view to_string(LagrangianMethod m) noexcept {
  switch (m) {
    case LagrangianMethod::closed_form: return "closed_form";
    case LagrangianMethod::gradient: return "gradient";
    case LagrangianMethod::shift_local: return "shift_local";
  }
  return "unknown";
}

struct LagrangianResult {
  double mu = 0.0;
  WeightVector witness;  // simplex point attaining mu
  std::size_t support_size = 0;
  LagrangianMethod method = LagrangianMethod::closed_form;
  std::optional<Rational> exact;  // closed form only
  std::vector<double> trajectory;  // shift_local: value after every move
};

inline std::size_t support_size(std::span<const double> x) {
  return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](double v) { return v > 0.0; }));
}

/// sum over t-cliques K of prod_{v in K} x_v.
inline double clique_poly(const CliqueSet& cs, const WeightVector& x) {
  if (x.normalization != Normalization::simplex) {
    throw ParameterError("clique_poly needs a simplex weight vector");
  }
  detail::check_dimension(cs, x.size());
  return detail::clique_sum_flat(cs.t(), cs.members(), x.values);
}

/// Partial derivatives of clique_poly; component v is the weighted count of
/// cliques through v. Same map as apply_clique_tensor.
inline std::vector<double> clique_poly_gradient(const CliqueSet& cs, std::span<const double> x) {
  return apply_clique_tensor(cs, x);
}

/// mu_t(G) = C(omega, t) omega^{-t}, witnessed by uniform weight on a maximum
/// clique. For t > omega the clique family is empty and mu_t = 0.
inline LagrangianResult mu_closed_form(const Graph& g, std::size_t t,
                                       std::uint64_t budget = kDefaultCliqueBudget) {
  if (t < 1) throw ParameterError("mu_closed_form requires t >= 1");
  const auto clique = maximum_clique(g, budget);
  const std::size_t omega = clique.size();
  LagrangianResult out;
  out.method = LagrangianMethod::closed_form;
  if (t > omega) {
    out.exact = Rational(0);
    out.witness = WeightVector::uniform_simplex(g.order());
    out.support_size = g.order();
    return out;
  }
  out.exact = Rational(binomial_exact(omega, t), ipow(omega, t));
  out.mu = to_double(*out.exact);
  std::vector<double> w(g.order(), 0.0);
  for (Vertex v : clique) w[v] = 1.0 / static_cast<double>(omega);
  out.witness = WeightVector{std::move(w), Normalization::simplex, 1};
  out.support_size = omega;
  return out;
}

/// Weight shifting towards a clique, starting from x0.
///
/// While the support contains a nonadjacent pair (first such pair in
/// lexicographic order), all weight of the endpoint with the smaller partial
/// derivative moves onto the other one (on ties, onto the smaller index).
/// Since no t-clique contains both endpoints, each move changes the value by
/// x_j (S_i - S_j) >= 0 and zeroes one entry. Once the support is a clique the
/// weights are replaced by the uniform distribution on it, which can only
/// raise the value. The result is a lower bound on mu_t, not mu_t itself.
inline LagrangianResult mu_shift_local(const Graph& g, const CliqueSet& cs,
                                       const WeightVector& x0) {
  if (x0.normalization != Normalization::simplex) {
    throw ParameterError("mu_shift_local needs a simplex starting point");
  }
  if (g.order() != cs.order()) throw ParameterError("graph and clique set disagree on n");
  detail::check_dimension(cs, x0.size());
  if (!x0.feasible()) throw ParameterError("starting point is not on the simplex");
  const std::size_t n = g.order();
  std::vector<double> x = x0.values;
  LagrangianResult out;
  out.method = LagrangianMethod::shift_local;
  out.trajectory.push_back(detail::clique_sum_flat(cs.t(), cs.members(), x));

  auto nonadjacent_pair = [&]() -> std::optional<std::pair<Vertex, Vertex>> {
    for (Vertex i = 0; i < n; ++i) {
      if (x[i] <= 0.0) continue;
      for (Vertex j = i + 1; j < n; ++j)
        if (x[j] > 0.0 && !g.adjacent(i, j)) return std::pair{i, j};
    }
    return std::nullopt;
  };
  while (auto pair = nonadjacent_pair()) {
    const auto [i, j] = *pair;
    const auto s = clique_poly_gradient(cs, x);
    if (s[i] >= s[j]) {
      x[i] += x[j];
      x[j] = 0.0;
    } else {
      x[j] += x[i];
      x[i] = 0.0;
    }
    out.trajectory.push_back(detail::clique_sum_flat(cs.t(), cs.members(), x));
  }
  const std::size_t support = support_size(x);
  for (double& v : x) v = v > 0.0 ? 1.0 / static_cast<double>(support) : 0.0;
  out.witness = WeightVector{std::move(x), Normalization::simplex, 1};
  out.mu = detail::clique_sum_flat(cs.t(), cs.members(), out.witness.values);
  out.trajectory.push_back(out.mu);
  out.support_size = support;
  return out;
}

/// Euclidean projection onto the probability simplex (sort-based).
inline void project_simplex(std::span<double> x) {
  if (x.empty()) return;
  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0, theta = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) theta = candidate;
  }
  for (double& v : x) v = std::max(v - theta, 0.0);
}

struct LagrangianOptions {
  std::size_t restarts = 64;
  double tol = 1e-14;
  std::uint64_t seed = 0;
  std::size_t max_iter = 20'000;
};

/// Restart count that makes mu_gradient reliable on small graphs:
/// 4 * 2^omega.
inline std::size_t recommended_restarts(std::size_t omega) {
  return std::size_t{4} << std::min<std::size_t>(omega, 20);
}

namespace detail {

struct SimplexRun {
  double value = 0.0;
  std::size_t iterations = 0;
  std::vector<double> x;
};

inline SimplexRun ascend_simplex(const CliqueSet& cs, std::vector<double> x,
                                 const LagrangianOptions& opts) {
  const std::size_t n = cs.order(), t = cs.t();
  std::vector<double> grad(n), trial(n);
  double value = clique_sum_flat(t, cs.members(), x);
  double step = 1.0;
  SimplexRun run;
  for (std::size_t it = 0; it < opts.max_iter; ++it) {
    run.iterations = it + 1;
    apply_flat(t, cs.members(), x, grad);
    bool accepted = false;
    double gain = 0.0;
    step = std::min(step * 4.0, 1e6);
    for (int halvings = 0; halvings < 80; ++halvings, step *= 0.5) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + step * grad[i];
      project_simplex(trial);
      double predicted = 0.0;
      for (std::size_t i = 0; i < n; ++i) predicted += grad[i] * (trial[i] - x[i]);
      if (predicted <= 0.0) break;
      const double candidate = clique_sum_flat(t, cs.members(), trial);
      if (candidate >= value + 0.5 * predicted) {
        gain = candidate - value;
        value = candidate;
        x.swap(trial);
        accepted = true;
        break;
      }
    }
    if (!accepted || gain <= opts.tol * value) break;
  }
  run.value = value;
  run.x = std::move(x);
  return run;
}

}  // namespace detail

/// Multistart projected gradient ascent of the clique polynomial on the
/// simplex with Euclidean projection and backtracking (sufficient increase
/// of half the predicted gain). Restart 0 starts at the barycentre; restart
/// k > 0 at a uniformly random simplex point drawn with Rng::derive(seed, k).
/// The best restart wins, ties going to the lower index. The value is a
/// lower bound on mu_t; global optimality is not certified.
inline LagrangianResult mu_gradient(const CliqueSet& cs, const LagrangianOptions& opts = {}) {
  if (opts.restarts < 1) throw ParameterError("mu_gradient requires restarts >= 1");
  const std::size_t n = cs.order();
  LagrangianResult out;
  out.method = LagrangianMethod::gradient;
  if (n == 0) return out;
  std::vector<detail::SimplexRun> runs(opts.restarts);
  parallel_for(opts.restarts, [&](std::size_t k) {
    std::vector<double> start(n, 1.0 / static_cast<double>(n));
    if (k > 0) {
      Rng rng(Rng::derive(opts.seed, k));
      double sum = 0.0;
      for (double& v : start) {
        v = -std::log1p(-rng.unit());
        sum += v;
      }
      for (double& v : start) v /= sum;
    }
    runs[k] = detail::ascend_simplex(cs, std::move(start), opts);
  });
  std::size_t best = 0;
  for (std::size_t k = 1; k < runs.size(); ++k)
    if (runs[k].value > runs[best].value) best = k;
  out.witness = WeightVector{std::move(runs[best].x), Normalization::simplex, 1};
  out.mu = detail::clique_sum_flat(cs.t(), cs.members(), out.witness.values);
  out.support_size = support_size(out.witness.values);
  return out;
}

}  // namespace cliquelab
