#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "cliquelab/bounds.hpp"
#include "cliquelab/cliques.hpp"
#include "cliquelab/combinatorics.hpp"
#include "cliquelab/error.hpp"
#include "cliquelab/lagrangian.hpp"
#include "cliquelab/spectral.hpp"
#include "cliquelab/stability.hpp"

// JSON output goes through nlohmann::json, whose dump() prints doubles in
// the shortest form that reads back to the same value. CSV uses
// std::to_chars, which has the same shortest round-trip contract, so both
// outputs agree digit for digit. Non-finite values become null in JSON and
// an empty field in CSV.

namespace cliquelab {

using Json = nlohmann::json;

inline std::string format_double(double v) {
  if (!std::isfinite(v)) return "";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

namespace detail {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

template <class T>
std::string optional_field(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) {
    return *v ? "true" : "false";
  } else if constexpr (std::is_floating_point_v<T>) {
    return format_double(*v);
  } else {
    return std::to_string(*v);
  }
}

inline const char* bool_field(bool b) { return b ? "true" : "false"; }

}  // namespace detail

inline Json clique_set_json(const CliqueSet& cs, bool include_cliques = true) {
  Json out{{"t", cs.t()}, {"count", cs.size()}, {"per_vertex", cs.per_vertex()}};
  if (include_cliques) out["cliques"] = cs.to_lists();
  return out;
}

inline Json to_json(const SpectralResult& r) {
  return Json{{"rho", r.rho},
              {"lower", detail::finite_or_null(r.lower)},
              {"upper", detail::finite_or_null(r.upper)},
              {"iterations", r.iterations},
              {"residual", detail::finite_or_null(r.residual)},
              {"method", std::string(to_string(r.method))},
              {"converged", r.converged},
              {"eigvec", r.eigvec.values}};
}

inline Json to_json(const LagrangianResult& r) {
  Json out{{"mu", r.mu},
           {"support_size", r.support_size},
           {"method", std::string(to_string(r.method))},
           {"witness", r.witness.values}};
  if (r.exact) out["mu_exact"] = to_fraction_string(*r.exact);
  if (!r.trajectory.empty()) out["trajectory"] = r.trajectory;
  return out;
}

inline Json to_json(const SosCheck& s) {
  return Json{{"holds", s.holds}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"equality", s.equality}};
}

inline Json to_json(const BoundsReport& b) {
  Json out{{"n", b.n},
           {"t", b.t},
           {"rho_t", b.rho_t},
           {"rho_method", std::string(to_string(b.rho_method))},
           {"clique_count_t", b.clique_count_t},
           {"constant_per_vertex", b.constant_per_vertex},
           {"omega_exact", detail::optional_json(b.omega_exact)},
           {"thm1_rhs", detail::optional_json(b.thm1_rhs)},
           {"thm1_holds", detail::optional_json(b.thm1_holds)},
           {"thm1_equality", detail::optional_json(b.thm1_equality)},
           {"omega_lower", b.omega_lower},
           {"omega_lower_sound", detail::optional_json(b.omega_lower_sound)},
           {"lemma2_rhs", b.lemma2_rhs},
           {"lemma2_holds", b.lemma2_holds},
           {"lemma2_equality", b.lemma2_equality},
           {"nikiforov_bound", nullptr},
           {"nikiforov_omega_lower", nullptr},
           {"nikiforov_infeasible", nullptr},
           {"r", detail::optional_json(b.r)},
           {"kr1_free", detail::optional_json(b.kr1_free)},
           {"erdos_count_rhs", nullptr},
           {"erdos_holds", nullptr},
           {"erdos_equality", nullptr},
           {"s", detail::optional_json(b.s)},
           {"sos_ok", nullptr},
           {"sos_lhs", nullptr},
           {"sos_rhs", nullptr}};
  if (b.nikiforov) {
    out["nikiforov_bound"] = detail::finite_or_null(b.nikiforov->bound);
    out["nikiforov_omega_lower"] =
        b.nikiforov->infeasible ? Json(nullptr) : Json(b.nikiforov->ceiling);
    out["nikiforov_infeasible"] = b.nikiforov->infeasible;
  }
  if (b.erdos) {
    out["erdos_count_rhs"] = b.erdos->rhs;
    out["erdos_holds"] = b.erdos->holds;
    out["erdos_equality"] = b.erdos->equality;
  }
  if (b.sos) {
    out["sos_ok"] = b.sos->holds;
    out["sos_lhs"] = b.sos->lhs;
    out["sos_rhs"] = b.sos->rhs;
  }
  return out;
}

/// Column order of the one-row bounds CSV.
inline constexpr std::string_view kBoundsCsvHeader =
    "n,t,rho_t,rho_method,clique_count_t,omega_exact,thm1_rhs,thm1_holds,omega_lower,"
    "lemma2_rhs,lemma2_holds,lemma2_equality,nikiforov_omega_lower,r,kr1_free,"
    "erdos_count_rhs,erdos_holds,s,sos_ok";

inline std::string bounds_csv_row(const BoundsReport& b) {
  std::vector<std::string> f;
  f.push_back(std::to_string(b.n));
  f.push_back(std::to_string(b.t));
  f.push_back(format_double(b.rho_t));
  f.emplace_back(to_string(b.rho_method));
  f.push_back(std::to_string(b.clique_count_t));
  f.push_back(detail::optional_field(b.omega_exact));
  f.push_back(detail::optional_field(b.thm1_rhs));
  f.push_back(detail::optional_field(b.thm1_holds));
  f.push_back(std::to_string(b.omega_lower));
  f.push_back(format_double(b.lemma2_rhs));
  f.emplace_back(detail::bool_field(b.lemma2_holds));
  f.emplace_back(detail::bool_field(b.lemma2_equality));
  f.push_back(b.nikiforov && !b.nikiforov->infeasible ? std::to_string(b.nikiforov->ceiling) : "");
  f.push_back(detail::optional_field(b.r));
  f.push_back(detail::optional_field(b.kr1_free));
  f.push_back(b.erdos ? format_double(b.erdos->rhs) : "");
  f.push_back(b.erdos ? detail::bool_field(b.erdos->holds) : "");
  f.push_back(detail::optional_field(b.s));
  f.push_back(b.sos ? detail::bool_field(b.sos->holds) : "");
  std::string row;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) row += ',';
    row += f[i];
  }
  return row;
}

inline Json to_json(const EditDistanceResult& e) {
  return Json{{"distance", e.distance},
              {"partition", e.partition},
              {"method", std::string(to_string(e.method))},
              {"certified", e.certified}};
}

inline Json to_json(const SweepRecord& s) {
  return Json{{"n", s.n},
              {"r", s.r},
              {"t", s.t},
              {"fraction", s.fraction},
              {"seed", s.seed},
              {"rho_t", s.rho_t},
              {"rho_deficit", s.rho_deficit},
              {"edit_distance", s.edit_distance},
              {"edit_density", s.edit_density},
              {"certified", s.certified},
              {"converged", s.converged}};
}

inline constexpr std::string_view kSweepCsvHeader =
    "n,r,t,fraction,seed,rho_t,rho_deficit,edit_distance,edit_density,certified";

inline void write_sweep_csv(std::ostream& os, std::span<const SweepRecord> records) {
  os << kSweepCsvHeader << '\n';
  for (const auto& s : records) {
    os << s.n << ',' << s.r << ',' << s.t << ',' << format_double(s.fraction) << ',' << s.seed
       << ',' << format_double(s.rho_t) << ',' << format_double(s.rho_deficit) << ','
       << s.edit_distance << ',' << format_double(s.edit_density) << ','
       << detail::bool_field(s.certified) << '\n';
  }
}

/// Two whitespace-separated columns, rho_deficit then edit_density, for
/// gnuplot's default `plot "file"`.
inline void write_sweep_gnuplot(std::ostream& os, std::span<const SweepRecord> records) {
  os << "# rho_deficit edit_density\n";
  for (const auto& s : records)
    os << format_double(s.rho_deficit) << ' ' << format_double(s.edit_density) << '\n';
}

inline Json error_json(const Error& e) {
  Json body{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (const auto* c = dynamic_cast<const ConvergenceError*>(&e)) {
    body["lower"] = detail::finite_or_null(c->lower());
    body["upper"] = detail::finite_or_null(c->upper());
    body["iterations"] = c->iterations();
  }
  if (const auto* p = dynamic_cast<const ParseError*>(&e); p && p->line() > 0) {
    body["line"] = p->line();
  }
  return Json{{"error", body}};
}

inline Json error_json(std::string_view kind, std::string_view message) {
  return Json{{"error", {{"kind", std::string(kind)}, {"message", std::string(message)}}}};
}

}  // namespace cliquelab
