#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "cliquelab/cliques.hpp"
#include "cliquelab/combinatorics.hpp"
#include "cliquelab/error.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/spectral.hpp"

namespace cliquelab {

/// Relative tolerance for comparisons between a float bound and a float value.
inline constexpr double kBoundTolerance = 1e-8;

/// (t / omega) C(omega, t)^{1/t} |C_t|^{(t-1)/t}: the clique-tensor upper bound
/// on rho_t. Zero when omega < t or there are no t-cliques.
inline double thm1_rhs(std::size_t omega, std::size_t t, std::uint64_t clique_count) {
  if (omega < 1) throw ParameterError("thm1_rhs requires omega >= 1");
  if (t < 2) throw ParameterError("thm1_rhs requires t >= 2");
  if (omega < t || clique_count == 0) return 0.0;
  const double td = static_cast<double>(t);
  return td / static_cast<double>(omega) * std::pow(binomial(omega, t), 1.0 / td) *
         std::pow(static_cast<double>(clique_count), (td - 1.0) / td);
}

/// Smallest omega >= t (at most n) with thm1_rhs(omega, t, count) >= rho_t
/// up to a 1e-9 relative slack; the bound is non-decreasing in omega, so the
/// first hit is the answer. Returns t - 1 when rho_t = 0, meaning no t-clique
/// is certified.
inline std::size_t omega_lower_bound(double rho_t, std::size_t t, std::uint64_t clique_count,
                                     std::size_t n) {
  if (t < 2) throw ParameterError("omega_lower_bound requires t >= 2");
  if (!(rho_t >= 0.0)) throw ParameterError("omega_lower_bound requires rho_t >= 0");
  if (rho_t == 0.0) return t - 1;
  const double target = rho_t - 1e-9 * std::max(1.0, rho_t);
  for (std::size_t omega = t; omega <= n; ++omega) {
    if (thm1_rhs(omega, t, clique_count) >= target) return omega;
  }
  throw InconsistencyError("no omega <= " + std::to_string(n) + " satisfies rho_" +
                           std::to_string(t) + " = " + std::to_string(rho_t) +
                           " with " + std::to_string(clique_count) + " cliques");
}

struct NikiforovBound {
  double bound = 1.0;    // omega >= 1 / (1 - rho^2 / (2 |E|))
  std::size_t ceiling = 1;
  bool infeasible = false;  // rho^2 >= 2|E|: no finite omega satisfies the bound
};

/// Lower bound on the clique number from 2|E| (omega - 1) / omega >= rho^2.
inline NikiforovBound nikiforov_omega_lower(double rho_2, std::uint64_t edge_count) {
  if (!(rho_2 >= 0.0)) throw ParameterError("nikiforov_omega_lower requires rho >= 0");
  if (edge_count < 1) throw ParameterError("nikiforov_omega_lower requires at least one edge");
  NikiforovBound out;
  const double two_e = 2.0 * static_cast<double>(edge_count);
  const double sq = rho_2 * rho_2;
  if (sq >= two_e) {
    out.infeasible = true;
    out.bound = std::numeric_limits<double>::infinity();
    out.ceiling = 0;
    return out;
  }
  out.bound = two_e / (two_e - sq);
  out.ceiling = static_cast<std::size_t>(std::ceil(out.bound - 1e-9));
  return out;
}

struct Lemma2Check {
  bool holds = true;
  double slack = 0.0;  // n rho / t - |C_t|
  bool equality = false;
};

/// |C_t| <= (n / t) rho_t.
inline Lemma2Check lemma2_check(std::size_t n, std::size_t t, double rho_t,
                                std::uint64_t clique_count) {
  if (t < 1) throw ParameterError("lemma2_check requires t >= 1");
  const double rhs = static_cast<double>(n) * rho_t / static_cast<double>(t);
  const double count = static_cast<double>(clique_count);
  Lemma2Check out;
  out.slack = rhs - count;
  out.holds = count <= rhs + kBoundTolerance * std::max(1.0, rhs);
  out.equality = std::abs(out.slack) <= kBoundTolerance * std::max(1.0, count);
  return out;
}

struct ErdosCheck {
  bool holds = true;
  double rhs = 0.0;  // (n / r)^t C(r, t)
  bool equality = false;
};

/// |C_t| <= (n / r)^t C(r, t) for K_{r+1}-free graphs, compared exactly as
/// |C_t| r^t <= n^t C(r, t).
inline ErdosCheck erdos_count_check(std::size_t n, std::size_t r, std::size_t t,
                                    std::uint64_t clique_count) {
  if (r < 1) throw ParameterError("erdos_count_check requires r >= 1");
  if (t < 1) throw ParameterError("erdos_count_check requires t >= 1");
  const BigInt lhs = BigInt(clique_count) * ipow(r, t);
  const BigInt rhs = ipow(n, t) * binomial_exact(r, t);
  ErdosCheck out;
  out.holds = lhs <= rhs;
  out.equality = lhs == rhs;
  out.rhs = to_double(Rational(rhs, ipow(r, t)));
  return out;
}

struct SosCheck {
  bool holds = true;
  double lhs = 0.0;  // (|C_t| / C(r, t))^{1/t}
  double rhs = 0.0;  // (|C_s| / C(r, s))^{1/s}
  bool equality = false;
};

inline constexpr double kSosTolerance = 1e-12;

/// Power-mean comparison of clique counts from precomputed counts; the caller
/// vouches that the graph is K_{r+1}-free.
inline SosCheck sos_check_counts(std::size_t r, std::size_t t, std::size_t s,
                                 std::uint64_t count_t, std::uint64_t count_s) {
  if (!(r >= t && t >= s && s >= 1)) {
    throw PreconditionError("sos_check requires r >= t >= s >= 1 (got r=" + std::to_string(r) +
                            ", t=" + std::to_string(t) + ", s=" + std::to_string(s) + ")");
  }
  SosCheck out;
  out.lhs = std::pow(static_cast<double>(count_t) / binomial(r, t), 1.0 / static_cast<double>(t));
  out.rhs = std::pow(static_cast<double>(count_s) / binomial(r, s), 1.0 / static_cast<double>(s));
  const double slack = kSosTolerance * std::max(1.0, out.rhs);
  out.holds = out.lhs <= out.rhs + slack;
  out.equality = std::abs(out.lhs - out.rhs) <= slack;
  return out;
}

inline SosCheck sos_check(const Graph& g, std::size_t r, std::size_t t, std::size_t s) {
  if (!(r >= t && t >= s && s >= 1)) {
    throw PreconditionError("sos_check requires r >= t >= s >= 1 (got r=" + std::to_string(r) +
                            ", t=" + std::to_string(t) + ", s=" + std::to_string(s) + ")");
  }
  if (!is_kr1_free(g, r)) {
    throw PreconditionError("sos_check requires a K_" + std::to_string(r + 1) + "-free graph");
  }
  return sos_check_counts(r, t, s, count_cliques(g, t), count_cliques(g, s));
}

struct BoundsOptions {
  bool compute_omega = true;
  std::optional<std::size_t> r;  // enables the K_{r+1}-free checks
  std::optional<std::size_t> s;  // with r, enables the power-mean check
  std::uint64_t budget = kDefaultCliqueBudget;
  PowerOptions power{};
};

/// Every bound evaluated on one graph for one t.
struct BoundsReport {
  std::size_t n = 0;
  std::size_t t = 0;
  double rho_t = 0.0;
  SpectralMethod rho_method = SpectralMethod::power;
  std::uint64_t clique_count_t = 0;
  bool constant_per_vertex = false;
  std::optional<std::size_t> omega_exact;
  std::optional<double> thm1_rhs;
  std::optional<bool> thm1_holds;
  std::optional<bool> thm1_equality;
  std::size_t omega_lower = 0;
  std::optional<bool> omega_lower_sound;
  double lemma2_rhs = 0.0;
  bool lemma2_holds = true;
  bool lemma2_equality = false;
  std::optional<NikiforovBound> nikiforov;  // t = 2 only
  std::optional<std::size_t> r;
  std::optional<bool> kr1_free;
  std::optional<ErdosCheck> erdos;
  std::optional<std::size_t> s;
  std::optional<SosCheck> sos;
};

inline BoundsReport bounds_report(const Graph& g, std::size_t t, const BoundsOptions& opts = {}) {
  if (t < 2) throw ParameterError("bounds_report requires t >= 2");
  BoundsReport rep;
  rep.n = g.order();
  rep.t = t;
  const auto cs = enumerate_cliques(g, t);
  rep.clique_count_t = cs.size();
  rep.constant_per_vertex = cs.constant_per_vertex();

  SpectralResult spectral;
  try {
    spectral = rho_power_iteration(cs, opts.power);
  } catch (const ConvergenceError&) {
    spectral = rho_gradient_ascent(cs);
  }
  rep.rho_t = spectral.rho;
  rep.rho_method = spectral.method;

  if (opts.compute_omega) {
    rep.omega_exact = clique_number(g, opts.budget);
    if (*rep.omega_exact >= 1) {
      rep.thm1_rhs = thm1_rhs(*rep.omega_exact, t, rep.clique_count_t);
      rep.thm1_holds = rep.rho_t <= *rep.thm1_rhs * (1.0 + kBoundTolerance) + kBoundTolerance;
      rep.thm1_equality = std::abs(rep.rho_t - *rep.thm1_rhs) <=
                          kBoundTolerance * std::max(1.0, *rep.thm1_rhs);
    }
  }
  rep.omega_lower = omega_lower_bound(rep.rho_t, t, rep.clique_count_t, g.order());
  if (rep.omega_exact) rep.omega_lower_sound = rep.omega_lower <= *rep.omega_exact;

  const auto l2 = lemma2_check(g.order(), t, rep.rho_t, rep.clique_count_t);
  rep.lemma2_rhs = static_cast<double>(g.order()) * rep.rho_t / static_cast<double>(t);
  rep.lemma2_holds = l2.holds;
  rep.lemma2_equality = l2.equality;

  if (t == 2 && g.edge_count() > 0) rep.nikiforov = nikiforov_omega_lower(rep.rho_t, g.edge_count());

  if (opts.r) {
    const std::size_t r = *opts.r;
    rep.r = r;
    rep.kr1_free = is_kr1_free(g, r);
    if (*rep.kr1_free) {
      rep.erdos = erdos_count_check(g.order(), r, t, rep.clique_count_t);
      if (opts.s) {
        rep.s = opts.s;
        rep.sos = sos_check_counts(r, t, *opts.s, rep.clique_count_t, count_cliques(g, *opts.s));
      }
    }
  }
  return rep;
}

}  // namespace cliquelab
