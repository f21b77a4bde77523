#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliquelab/cliques.hpp"
#include "cliquelab/combinatorics.hpp"
#include "cliquelab/error.hpp"
#include "cliquelab/parallel.hpp"
#include "cliquelab/rng.hpp"

namespace cliquelab {

enum class Normalization { t_norm, simplex };

/// Nonnegative vertex weights with either sum x_i^t = 1 (eigenvector side)
/// or sum x_i = 1 (simplex side).
struct WeightVector {
  std::vector<double> values;
  Normalization normalization = Normalization::t_norm;
  std::size_t t = 1;  // exponent of the t-norm; 1 for the simplex

  static constexpr double kTolerance = 1e-12;

  std::size_t size() const noexcept { return values.size(); }

  double norm_sum() const {
    double sum = 0.0;
    for (double v : values) sum += power(v, t);
    return sum;
  }

  bool feasible(double tol = kTolerance) const {
    return std::all_of(values.begin(), values.end(), [](double v) { return v >= 0.0; }) &&
           std::abs(norm_sum() - 1.0) <= tol;
  }

  /// Rescales nonnegative values onto the t-norm sphere. All-zero input
  /// becomes the uniform vector.
  static WeightVector on_t_sphere(std::vector<double> values, std::size_t t) {
    if (t < 1) throw ParameterError("t-norm exponent must be >= 1");
    WeightVector w{std::move(values), Normalization::t_norm, t};
    w.rescale();
    return w;
  }

  static WeightVector on_simplex(std::vector<double> values) {
    WeightVector w{std::move(values), Normalization::simplex, 1};
    w.rescale();
    return w;
  }

  static WeightVector uniform_t_norm(std::size_t n, std::size_t t) {
    return on_t_sphere(std::vector<double>(n, 1.0), t);
  }

  static WeightVector uniform_simplex(std::size_t n) {
    return on_simplex(std::vector<double>(n, 1.0));
  }

  static double power(double x, std::size_t k) {
    double out = 1.0;
    for (std::size_t i = 0; i < k; ++i) out *= x;
    return out;
  }

 private:
  void rescale() {
    for (double v : values)
      if (!(v >= 0.0)) throw ParameterError("weights must be nonnegative");
    double sum = norm_sum();
    if (sum <= 0.0) {
      std::fill(values.begin(), values.end(), 1.0);
      sum = norm_sum();
    }
    if (values.empty()) return;
    const double scale = 1.0 / std::pow(sum, 1.0 / static_cast<double>(t));
    for (double& v : values) v *= scale;
  }
};

enum class SpectralMethod { power, gradient, oracle };

inline std::string_view to_string(SpectralMethod m) noexcept {
  switch (m) {
    case SpectralMethod::power: return "power";
    case SpectralMethod::gradient: return "gradient";
    case SpectralMethod::oracle: return "oracle";
  }
  return "unknown";
}

/// Estimate of rho_t with the bracket it was certified in. upper is +inf for
/// methods that only certify from below.
struct SpectralResult {
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  WeightVector eigvec;
  std::size_t iterations = 0;
  double residual = 0.0;
  SpectralMethod method = SpectralMethod::power;
  bool converged = true;
};

/// Eigenpair residual tolerance, relative to max(1, rho).
inline constexpr double kResidualTolerance = 1e-8;

namespace detail {

// out_i = sum over cliques K containing i of prod_{v in K, v != i} x_v, with
// each product taken left to right in vertex order.
inline void apply_flat(std::size_t t, std::span<const Vertex> members,
                       std::span<const double> x, std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t base = 0; base < members.size(); base += t) {
    const Vertex* k = members.data() + base;
    for (std::size_t skip = 0; skip < t; ++skip) {
      double prod = 1.0;
      for (std::size_t j = 0; j < t; ++j)
        if (j != skip) prod *= x[k[j]];
      out[k[skip]] += prod;
    }
  }
}

// sum over cliques of prod x_v.
inline double clique_sum_flat(std::size_t t, std::span<const Vertex> members,
                              std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t base = 0; base < members.size(); base += t) {
    double prod = 1.0;
    for (std::size_t j = 0; j < t; ++j) prod *= x[members[base + j]];
    sum += prod;
  }
  return sum;
}

inline void check_dimension(const CliqueSet& cs, std::size_t size) {
  if (size != cs.order()) {
    throw ParameterError("weight vector has " + std::to_string(size) +
                         " entries, graph has " + std::to_string(cs.order()) + " vertices");
  }
}

}  // namespace detail

/// (A(G) x^{t-1})_i for every vertex i, evaluated from the clique list
/// without materialising the order-t tensor. The 1/(t-1)! entry cancels
/// against the (t-1)! orderings of each clique's remaining vertices.
inline std::vector<double> apply_clique_tensor(const CliqueSet& cs, std::span<const double> x) {
  detail::check_dimension(cs, x.size());
  for (double v : x)
    if (v < 0.0) throw ParameterError("apply_clique_tensor requires nonnegative weights");
  std::vector<double> out(cs.order());
  detail::apply_flat(cs.t(), cs.members(), x, out);
  return out;
}

inline std::vector<double> apply_clique_tensor(const CliqueSet& cs, const WeightVector& x) {
  return apply_clique_tensor(cs, std::span<const double>(x.values));
}

/// t * sum_{K in C_t} prod_{v in K} x_v for x on the t-norm sphere; a lower
/// bound on rho_t, attained at the Perron vector.
inline double rayleigh_value(const CliqueSet& cs, const WeightVector& x) {
  if (x.normalization != Normalization::t_norm || x.t != cs.t()) {
    throw ParameterError("rayleigh_value needs a t-norm weight vector with t = " +
                         std::to_string(cs.t()));
  }
  if (!x.feasible()) throw ParameterError("weight vector is not on the t-norm sphere");
  detail::check_dimension(cs, x.size());
  return static_cast<double>(cs.t()) * detail::clique_sum_flat(cs.t(), cs.members(), x.values);
}

/// max_i |rho x_i^{t-1} - (A x^{t-1})_i|.
inline double eigenpair_residual(const CliqueSet& cs, std::span<const double> x, double rho) {
  const auto ax = apply_clique_tensor(cs, x);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    worst = std::max(worst,
                     std::abs(rho * WeightVector::power(x[i], cs.t() - 1) - ax[i]));
  }
  return worst;
}

/// Connected components of the hypergraph whose hyperedges are the cliques.
/// Each component lists its vertices ascending and its cliques in order;
/// components are ordered by smallest vertex. Uncovered vertices are skipped.
struct CliqueComponent {
  std::vector<Vertex> vertices;
  std::vector<Vertex> local_members;  // clique tuples in local indices
};

inline std::vector<CliqueComponent> clique_components(const CliqueSet& cs) {
  const std::size_t n = cs.order(), t = cs.t();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const auto c = cs.clique(k);
    for (std::size_t j = 1; j < t; ++j) {
      const Vertex a = find(c[0]), b = find(c[j]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<int> slot(n, -1);
  std::vector<Vertex> local(n, 0);
  std::vector<CliqueComponent> out;
  for (Vertex v = 0; v < n; ++v) {
    if (cs.per_vertex()[v] == 0) continue;
    const Vertex root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(out.size());
      out.emplace_back();
    }
    auto& comp = out[static_cast<std::size_t>(slot[root])];
    local[v] = static_cast<Vertex>(comp.vertices.size());
    comp.vertices.push_back(v);
  }
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const auto c = cs.clique(k);
    auto& comp = out[static_cast<std::size_t>(slot[find(c[0])])];
    for (Vertex v : c) comp.local_members.push_back(local[v]);
  }
  return out;
}

struct PowerOptions {
  double shift = 1.0;
  double tol = 1e-10;
  std::size_t max_iter = 100'000;
};

namespace detail {

struct ComponentSolve {
  double rho = 0.0, lower = 0.0, upper = 0.0, residual = 0.0;
  std::size_t iterations = 0;
  std::vector<double> x;
};

inline ComponentSolve power_on_component(std::size_t t, const CliqueComponent& comp,
                                         const PowerOptions& opts) {
  const std::size_t m = comp.vertices.size();
  const double sigma = opts.shift;
  const double inv_root = 1.0 / static_cast<double>(t - 1);
  std::vector<double> x(m, std::pow(1.0 / static_cast<double>(m), 1.0 / static_cast<double>(t)));
  std::vector<double> ax(m), y(m);
  ComponentSolve out;
  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    apply_flat(t, comp.local_members, x, ax);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double p = WeightVector::power(x[i], t - 1);
      y[i] = ax[i] + sigma * p;
      const double ratio = y[i] / p;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      rayleigh += x[i] * ax[i];
    }
    lo -= sigma;
    hi -= sigma;
    // The Rayleigh value is a convex combination of the ratios, so it sits
    // inside [lo, hi]; clamping only guards against roundoff.
    const double rho = std::clamp(rayleigh, lo, hi);
    if (hi - lo <= opts.tol * std::max(1.0, rho)) {
      out.rho = rho;
      out.lower = lo;
      out.upper = hi;
      out.iterations = it;
      for (std::size_t i = 0; i < m; ++i) {
        out.residual = std::max(
            out.residual, std::abs(rho * WeightVector::power(x[i], t - 1) - ax[i]));
      }
      out.x = std::move(x);
      return out;
    }
    if (it == opts.max_iter) {
      throw ConvergenceError("power iteration did not converge in " +
                                 std::to_string(opts.max_iter) + " iterations (bracket [" +
                                 std::to_string(lo) + ", " + std::to_string(hi) + "])",
                             lo, hi, it);
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      x[i] = std::pow(y[i], inv_root);
      norm += WeightVector::power(x[i], t);
    }
    const double scale = 1.0 / std::pow(norm, 1.0 / static_cast<double>(t));
    for (double& v : x) v *= scale;
  }
  return out;
}

}  // namespace detail

/// Shifted power iteration for the nonnegative clique tensor, run separately
/// on every connected component of the clique hypergraph. Each step maps
/// x -> (A x^{t-1} + shift x^{t-1})^{1/(t-1)}, renormalised, and brackets rho
/// between the smallest and largest ratio (A x^{t-1})_i / x_i^{t-1}. Stops once
/// the bracket is narrower than tol * max(1, rho). rho is the largest
/// component value; a graph without t-cliques gets exactly 0.
inline SpectralResult rho_power_iteration(const CliqueSet& cs, const PowerOptions& opts = {}) {
  if (cs.t() < 2) throw ParameterError("rho_power_iteration requires t >= 2");
  if (!(opts.shift > 0.0)) throw ParameterError("power iteration shift must be positive");
  if (!(opts.tol > 0.0)) throw ParameterError("power iteration tolerance must be positive");
  const std::size_t t = cs.t(), n = cs.order();
  SpectralResult result;
  result.method = SpectralMethod::power;
  if (cs.empty()) {
    result.eigvec = WeightVector::uniform_t_norm(n, t);
    return result;
  }
  const auto components = clique_components(cs);
  bool first = true;
  detail::ComponentSolve best;
  const CliqueComponent* best_comp = nullptr;
  for (const auto& comp : components) {
    auto solved = detail::power_on_component(t, comp, opts);
    result.iterations += solved.iterations;
    if (first) {
      result.lower = solved.lower;
      result.upper = solved.upper;
    } else {
      result.lower = std::max(result.lower, solved.lower);
      result.upper = std::max(result.upper, solved.upper);
    }
    if (first || solved.rho > best.rho) {
      best = std::move(solved);
      best_comp = &comp;
    }
    first = false;
  }
  std::vector<double> eig(n, 0.0);
  for (std::size_t i = 0; i < best_comp->vertices.size(); ++i) eig[best_comp->vertices[i]] = best.x[i];
  result.rho = best.rho;
  result.eigvec = WeightVector{std::move(eig), Normalization::t_norm, t};
  result.residual = best.residual;
  return result;
}

struct GradientOptions {
  std::size_t restarts = 8;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::size_t max_iter = 100'000;
};

namespace detail {

struct AscentRun {
  double value = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> x;
};

inline double retract_t_sphere(std::vector<double>& x, std::size_t t) {
  double norm = 0.0;
  for (double& v : x) {
    v = std::max(v, 0.0);
    norm += WeightVector::power(v, t);
  }
  if (norm <= 0.0) return 0.0;
  const double scale = 1.0 / std::pow(norm, 1.0 / static_cast<double>(t));
  for (double& v : x) v *= scale;
  return norm;
}

// Sufficient-increase constant. Plain "any increase" acceptance lets a step
// that flips the non-Perron part of x with unit gain be taken forever.
inline constexpr double kArmijo = 0.5;
inline constexpr double kRoundoff = 1e-13;

inline AscentRun ascend_rayleigh(const CliqueSet& cs, std::vector<double> x,
                                 const GradientOptions& opts) {
  const std::size_t n = cs.order(), t = cs.t();
  const double td = static_cast<double>(t);
  AscentRun run;
  retract_t_sphere(x, t);
  std::vector<double> ax(n), dir(n), trial(n), trial_ax(n);
  double value = td * clique_sum_flat(t, cs.members(), x);
  for (std::size_t it = 0;; ++it) {
    apply_flat(t, cs.members(), x, ax);
    // Remove the component of the gradient t*A x^{t-1} along the sphere's
    // normal x^{t-1}; what remains vanishes exactly at eigenvectors.
    double gn = 0.0, nn = 0.0, residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double normal = WeightVector::power(x[i], t - 1);
      gn += td * ax[i] * normal;
      nn += normal * normal;
      residual = std::max(residual, std::abs(value * normal - ax[i]));
    }
    run.residual = residual;
    run.iterations = it;
    if (residual <= opts.tol * std::max(1.0, value)) {
      run.converged = true;
      break;
    }
    if (it == opts.max_iter) break;
    double slope = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      dir[i] = td * ax[i] - gn / nn * WeightVector::power(x[i], t - 1);
      slope += dir[i] * dir[i];
    }
    bool accepted = false;
    double step = 1.0;
    for (int halvings = 0; halvings < 60; ++halvings, step *= 0.5) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + step * dir[i];
      if (retract_t_sphere(trial, t) <= 0.0) continue;
      const double candidate = td * clique_sum_flat(t, cs.members(), trial);
      const double noise = kRoundoff * std::max(1.0, value);
      const double predicted = kArmijo * step * slope;
      bool take = predicted > noise && candidate > value + predicted;
      if (predicted <= noise && std::abs(candidate - value) <= noise) {
        // Value differences are pure roundoff here; judge by the residual.
        apply_flat(t, cs.members(), trial, trial_ax);
        double trial_residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          trial_residual = std::max(
              trial_residual,
              std::abs(candidate * WeightVector::power(trial[i], t - 1) - trial_ax[i]));
        }
        take = trial_residual < residual;
      }
      if (take) {
        value = candidate;
        x.swap(trial);
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  run.value = value;
  run.x = std::move(x);
  return run;
}

}  // namespace detail

/// Multistart projected gradient ascent of the Rayleigh functional over the
/// nonnegative t-norm sphere. The step follows the gradient with its normal
/// component removed, clamps negatives and rescales onto the sphere, and
/// backtracks by halving from 1.0 until the functional increases by at least
/// kArmijo * step * |direction|^2. Once that predicted gain drops below
/// roundoff, a step is accepted if it lowers the eigenpair residual instead.
/// Restart k starts from uniform weights
/// perturbed by up to +-50% using Rng::derive(seed, k); vertices in no
/// t-clique start (and stay) at zero since the functional ignores them.
/// Only a lower bound is certified: upper is +inf.
inline SpectralResult rho_gradient_ascent(const CliqueSet& cs, const GradientOptions& opts = {}) {
  if (cs.t() < 2) throw ParameterError("rho_gradient_ascent requires t >= 2");
  if (opts.restarts < 1) throw ParameterError("rho_gradient_ascent requires restarts >= 1");
  const std::size_t n = cs.order(), t = cs.t();
  SpectralResult result;
  result.method = SpectralMethod::gradient;
  result.upper = std::numeric_limits<double>::infinity();
  if (cs.empty()) {
    result.eigvec = WeightVector::uniform_t_norm(n, t);
    return result;
  }
  std::vector<detail::AscentRun> runs(opts.restarts);
  parallel_for(opts.restarts, [&](std::size_t k) {
    Rng rng(Rng::derive(opts.seed, k));
    std::vector<double> start(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double jitter = 1.0 + (rng.unit() - 0.5);
      start[i] = cs.per_vertex()[i] > 0 ? jitter : 0.0;
    }
    runs[k] = detail::ascend_rayleigh(cs, std::move(start), opts);
  });
  std::size_t best = 0;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    result.iterations += runs[k].iterations;
    if (runs[k].value > runs[best].value) best = k;
  }
  result.rho = runs[best].value;
  result.lower = runs[best].value;
  result.residual = runs[best].residual;
  result.converged = runs[best].converged;
  result.eigvec = WeightVector{std::move(runs[best].x), Normalization::t_norm, t};
  return result;
}

/// Value of the brute-force oracle with an upper certificate.
struct OracleResult {
  double value = 0.0;       // attained at `point`
  double upper = 0.0;       // valid upper bound on rho_t
  std::vector<double> point;  // on the t-norm sphere
  std::size_t evaluations = 0;
};

inline constexpr std::size_t kOracleMaxVertices = 8;
inline constexpr std::size_t kOracleDefaultDepth = 40;

namespace detail {

// Substituting y_i = x_i^t maps the nonnegative t-norm sphere onto the
// simplex and turns every clique monomial prod x_v into the geometric mean of
// the y_v over the clique. A sum of geometric means is concave, so the
// maximisation below is a concave program on the simplex.
inline double oracle_objective(std::size_t t, std::span<const Vertex> members,
                               std::span<const double> y) {
  double sum = 0.0;
  const double inv_t = 1.0 / static_cast<double>(t);
  for (std::size_t base = 0; base < members.size(); base += t) {
    double prod = 1.0;
    for (std::size_t j = 0; j < t; ++j) prod *= y[members[base + j]];
    sum += std::pow(prod, inv_t);
  }
  return static_cast<double>(t) * sum;
}

// Concavity gives F(y*) <= F(y) + g.(y* - y) <= F(y) + max_i g_i - g.y for
// the gradient g at any interior point y.
inline double oracle_certificate(std::size_t t, std::span<const Vertex> members,
                                 std::span<const double> y) {
  const std::size_t n = y.size();
  std::vector<double> g(n, 0.0);
  const double inv_t = 1.0 / static_cast<double>(t);
  double value = 0.0;
  for (std::size_t base = 0; base < members.size(); base += t) {
    double prod = 1.0;
    for (std::size_t j = 0; j < t; ++j) prod *= y[members[base + j]];
    const double gm = std::pow(prod, inv_t);
    value += static_cast<double>(t) * gm;
    for (std::size_t j = 0; j < t; ++j) g[members[base + j]] += gm / y[members[base + j]];
  }
  double gmax = 0.0, gy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    gmax = std::max(gmax, g[i]);
    gy += g[i] * y[i];
  }
  return value + gmax - gy;
}

}  // namespace detail

/// Brute-force maximisation of the Rayleigh functional for n <= 8.
///
/// Works in the coordinates y_i = x_i^t, where the functional is concave on
/// the simplex. A full simplex grid of step 1/N (N the largest resolution
/// with at most 10^5 grid points) seeds a refinement search that tries every
/// pairwise weight transfer y_i -> y_j of the current step, moves to the best
/// improvement, and halves the step when none improves, grid_depth times.
/// Concavity makes the refined point a global maximiser. `upper` is the
/// tightest concavity certificate found at interior points around it.
inline OracleResult oracle_rho_bruteforce(const CliqueSet& cs,
                                          std::size_t grid_depth = kOracleDefaultDepth) {
  const std::size_t n = cs.order(), t = cs.t();
  if (n > kOracleMaxVertices) {
    throw ParameterError("oracle_rho_bruteforce refuses graphs with more than " +
                         std::to_string(kOracleMaxVertices) + " vertices");
  }
  if (t < 2) throw ParameterError("oracle_rho_bruteforce requires t >= 2");
  OracleResult out;
  if (cs.empty() || n == 0) {
    out.point.assign(n, n == 0 ? 0.0 : std::pow(1.0 / static_cast<double>(n), 1.0 / static_cast<double>(t)));
    return out;
  }
  const auto members = cs.members();
  auto objective = [&](std::span<const double> y) {
    ++out.evaluations;
    return detail::oracle_objective(t, members, y);
  };

  // Coarse grid: all compositions of N into n parts.
  auto grid_points = [n](std::size_t N) {
    return binomial_count(N + n - 1, n - 1);
  };
  std::size_t resolution = 1;
  while (grid_points(resolution + 1) <= 100'000 && resolution < 64) ++resolution;
  std::vector<std::size_t> parts(n, 0);
  std::vector<double> y(n), best(n);
  double best_value = -1.0;
  auto visit = [&](auto&& self, std::size_t idx, std::size_t remaining) -> void {
    if (idx + 1 == n) {
      parts[idx] = remaining;
      for (std::size_t i = 0; i < n; ++i) {
        y[i] = static_cast<double>(parts[i]) / static_cast<double>(resolution);
      }
      const double value = objective(y);
      if (value > best_value) {
        best_value = value;
        best = y;
      }
      return;
    }
    for (std::size_t k = 0; k <= remaining; ++k) {
      parts[idx] = k;
      self(self, idx + 1, remaining - k);
    }
  };
  visit(visit, 0, resolution);

  // Refinement by pairwise transfers with step halving.
  double step = 1.0 / static_cast<double>(resolution);
  std::vector<double> trial(n);
  for (std::size_t level = 0; level <= grid_depth; ++level) {
    for (;;) {
      double move_value = best_value;
      std::size_t move_from = n, move_to = n;
      for (std::size_t from = 0; from < n; ++from) {
        if (best[from] <= 0.0) continue;
        const double amount = std::min(step, best[from]);
        for (std::size_t to = 0; to < n; ++to) {
          if (to == from) continue;
          trial = best;
          trial[from] -= amount;
          trial[to] += amount;
          const double value = objective(trial);
          if (value > move_value) {
            move_value = value;
            move_from = from;
            move_to = to;
          }
        }
      }
      if (move_from == n) break;
      const double amount = std::min(step, best[move_from]);
      best[move_from] -= amount;
      best[move_to] += amount;
      best_value = move_value;
    }
    step *= 0.5;
  }

  out.value = best_value;
  out.upper = std::numeric_limits<double>::infinity();
  for (double eps : {0.0, 1e-4, 1e-6, 1e-8, 1e-10, 1e-12, 1e-14}) {
    for (std::size_t i = 0; i < n; ++i) {
      trial[i] = (1.0 - eps) * best[i] + eps / static_cast<double>(n);
    }
    if (std::any_of(trial.begin(), trial.end(), [](double v) { return v <= 0.0; })) continue;
    out.upper = std::min(out.upper, detail::oracle_certificate(t, members, trial));
  }
  out.upper = std::max(out.upper, out.value);
  out.point.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.point[i] = std::pow(best[i], 1.0 / static_cast<double>(t));
  }
  return out;
}

}  // namespace cliquelab
