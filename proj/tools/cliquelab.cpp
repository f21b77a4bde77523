// cliquelab: command-line front end for the cliquelab library.
//
// Exit codes: 0 success, 1 invalid input (flags, files, preconditions),
// 2 computation failure (budget exhausted, non-convergence, inconsistent
// numerics). Failures print {"error": {"kind", "message"}} on stderr.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cliquelab/cliquelab.hpp"

namespace cl = cliquelab;
using cl::Json;

namespace {

enum class OutputFormat { json, csv, plain };

struct Globals {
  std::string format = "auto";
  std::string out;
};

struct GraphInput {
  std::string path;
  std::string format;

  cl::Graph load() const {
    if (format.empty()) return cl::load_graph(path);
    return cl::load_graph(path, cl::parse_graph_format(format));
  }
};

void add_graph_input(CLI::App* sub, GraphInput& in) {
  sub->add_option("-g,--graph", in.path, "Graph file")->required();
  sub->add_option("--input-format", in.format, "edge_list or dimacs_col (default: by extension)");
}

OutputFormat resolve_format(const Globals& g, OutputFormat fallback) {
  if (g.format == "auto") return fallback;
  if (g.format == "json") return OutputFormat::json;
  if (g.format == "csv") return OutputFormat::csv;
  return OutputFormat::plain;
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw cl::IoError("cannot write output file '" + g.out + "'");
  file << text;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

void require_seed(const std::optional<std::uint64_t>& seed, const std::string& what) {
  if (!seed) throw cl::ParameterError(what + " is randomized and requires --seed");
}

int fail(const cl::Error& e) {
  std::cerr << cl::error_json(e).dump() << '\n';
  return cl::is_computation_error(e.kind()) ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"t-clique spectral radii, graph Lagrangians and clique-number bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--output-format", globals.format, "json, csv or plain")
      ->check(CLI::IsMember({"auto", "json", "csv", "plain"}));
  app.add_option("--out", globals.out, "Write the result here instead of stdout");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph family and save it");
  std::string family, gen_out, gen_format, p_text = "1/2", gen_source;
  std::size_t gen_n = 0, gen_r = 0, gen_omega = 0, gen_s = 0;
  std::optional<std::uint64_t> gen_seed;
  gen->add_option("family", family,
                  "complete, cycle, path, turan, multipartite, unicyclic, er, petersen, file")
      ->required();
  gen->add_option("--n", gen_n, "Vertex count");
  gen->add_option("--r", gen_r, "Part count (turan)");
  gen->add_option("--omega", gen_omega, "Part count (multipartite)");
  gen->add_option("--s", gen_s, "Part size (multipartite)");
  gen->add_option("--p", p_text, "Edge probability, num/den or decimal (er)");
  gen->add_option("--seed", gen_seed, "Seed (er)");
  gen->add_option("--from", gen_source, "Source file (file family)");
  gen->add_option("-o,--output", gen_out, "Destination graph file")->required();
  gen->add_option("--format", gen_format, "edge_list or dimacs_col (default: by extension)");

  // cliques
  auto* cliques = app.add_subcommand("cliques", "Enumerate t-cliques");
  GraphInput cliques_in;
  std::size_t cliques_t = 0;
  bool no_list = false;
  add_graph_input(cliques, cliques_in);
  cliques->add_option("-t", cliques_t, "Clique order")->required()->check(CLI::PositiveNumber);
  cliques->add_flag("--no-list", no_list, "Omit the clique list");

  // rho
  auto* rho = app.add_subcommand("rho", "t-clique spectral radius");
  GraphInput rho_in;
  std::size_t rho_t = 0, rho_restarts = 8, grid_depth = cl::kOracleDefaultDepth;
  std::string rho_method = "power";
  cl::PowerOptions power_opts;
  std::optional<double> rho_tol;
  std::optional<std::uint64_t> rho_seed;
  add_graph_input(rho, rho_in);
  rho->add_option("-t", rho_t, "Clique order (>= 2)")->required()->check(CLI::Range(2, 64));
  rho->add_option("--method", rho_method, "power, gradient or oracle")
      ->check(CLI::IsMember({"power", "gradient", "oracle"}));
  rho->add_option("--tol", rho_tol, "Relative tolerance")->check(CLI::PositiveNumber);
  rho->add_option("--seed", rho_seed, "Seed (gradient)");
  rho->add_option("--restarts", rho_restarts, "Restarts (gradient)")->check(CLI::PositiveNumber);
  rho->add_option("--shift", power_opts.shift, "Shift sigma (power)")->check(CLI::PositiveNumber);
  rho->add_option("--max-iter", power_opts.max_iter, "Iteration cap (power)")
      ->check(CLI::PositiveNumber);
  rho->add_option("--grid-depth", grid_depth, "Refinement depth (oracle)");

  // mu
  auto* mu = app.add_subcommand("mu", "Generalized graph Lagrangian");
  GraphInput mu_in;
  std::size_t mu_t = 0;
  std::optional<std::size_t> mu_restarts;
  std::string mu_method = "closed";
  std::optional<std::uint64_t> mu_seed;
  add_graph_input(mu, mu_in);
  mu->add_option("-t", mu_t, "Clique order")->required()->check(CLI::PositiveNumber);
  mu->add_option("--method", mu_method, "closed, gradient or shift")
      ->check(CLI::IsMember({"closed", "gradient", "shift"}));
  mu->add_option("--restarts", mu_restarts, "Restarts (gradient)")->check(CLI::PositiveNumber);
  mu->add_option("--seed", mu_seed, "Seed (gradient)");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Every bound for one graph and t");
  GraphInput bounds_in;
  std::size_t bounds_t = 0;
  bool omega_exact = false;
  std::optional<std::size_t> bounds_r, bounds_s;
  std::uint64_t budget = cl::kDefaultCliqueBudget;
  add_graph_input(bounds, bounds_in);
  bounds->add_option("-t", bounds_t, "Clique order (>= 2)")->required()->check(CLI::Range(2, 64));
  bounds->add_flag("--omega-exact", omega_exact, "Compute the exact clique number");
  bounds->add_option("--r", bounds_r, "Enable the K_{r+1}-free checks")->check(CLI::PositiveNumber);
  bounds->add_option("--s", bounds_s, "With --r, enable the power-mean check")
      ->check(CLI::PositiveNumber);
  bounds->add_option("--budget", budget, "Clique-number node budget")->check(CLI::PositiveNumber);

  // sos
  auto* sos = app.add_subcommand("sos", "Power-mean clique count check");
  GraphInput sos_in;
  std::size_t sos_r = 0, sos_t = 0, sos_s = 0;
  add_graph_input(sos, sos_in);
  sos->add_option("-r", sos_r, "Clique-free order")->required();
  sos->add_option("-t", sos_t, "Larger clique order")->required();
  sos->add_option("-s", sos_s, "Smaller clique order")->required();

  // edit-dist
  auto* edit = app.add_subcommand("edit-dist", "Edit distance to the Turan graph");
  GraphInput edit_in;
  std::size_t edit_r = 0, edit_restarts = 32;
  bool force_exact = false, force_local = false;
  std::optional<std::uint64_t> edit_seed;
  add_graph_input(edit, edit_in);
  edit->add_option("-r", edit_r, "Part count")->required()->check(CLI::PositiveNumber);
  auto* exact_flag = edit->add_flag("--exact", force_exact, "Exhaustive search");
  edit->add_flag("--local", force_local, "Kernighan-Lin local search")->excludes(exact_flag);
  edit->add_option("--seed", edit_seed, "Seed (local search)");
  edit->add_option("--restarts", edit_restarts, "Restarts (local search)")
      ->check(CLI::PositiveNumber);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Stability sweep over perturbed Turan graphs");
  std::string sweep_config;
  sweep->add_option("--config", sweep_config, "JSON config {n, r, t, fractions, seeds}")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << cl::error_json("parameter", e.what()).dump() << '\n';
    return 1;
  }

  try {
    if (*gen) {
      cl::GraphSpec spec;
      spec.family = cl::parse_family(family);
      const auto out_format = gen_format.empty() ? cl::guess_graph_format(gen_out)
                                                 : cl::parse_graph_format(gen_format);
      spec.n = gen_n;
      spec.r = gen_r;
      spec.omega = gen_omega;
      spec.s = gen_s;
      spec.seed = gen_seed;
      spec.path = gen_source;
      if (spec.family == cl::Family::erdos_renyi) {
        spec.p = cl::parse_probability(p_text);
        require_seed(gen_seed, "gen er");
      }
      const cl::Graph g = cl::generate(spec);
      cl::save_graph(g, gen_out, out_format);
      const auto fmt = resolve_format(globals, OutputFormat::json);
      if (fmt == OutputFormat::json) {
        emit(globals, dump(Json{{"name", g.name()},
                                {"n", g.order()},
                                {"m", g.edge_count()},
                                {"path", gen_out},
                                {"format", std::string(cl::to_string(out_format))}}));
      } else if (fmt == OutputFormat::csv) {
        emit(globals, "name,n,m\n" + g.name() + "," + std::to_string(g.order()) + "," +
                          std::to_string(g.edge_count()) + "\n");
      } else {
        emit(globals, g.name() + ": n=" + std::to_string(g.order()) +
                          " m=" + std::to_string(g.edge_count()) + "\n");
      }
    } else if (*cliques) {
      const cl::Graph g = cliques_in.load();
      const auto cs = cl::enumerate_cliques(g, cliques_t);
      const auto fmt = resolve_format(globals, OutputFormat::json);
      if (fmt == OutputFormat::json) {
        emit(globals, dump(cl::clique_set_json(cs, !no_list)));
      } else if (fmt == OutputFormat::csv) {
        emit(globals, "t,count\n" + std::to_string(cs.t()) + "," + std::to_string(cs.size()) + "\n");
      } else {
        emit(globals, std::to_string(cs.size()) + "\n");
      }
    } else if (*rho) {
      const cl::Graph g = rho_in.load();
      const auto cs = cl::enumerate_cliques(g, rho_t);
      cl::SpectralResult res;
      if (rho_method == "power") {
        if (rho_tol) power_opts.tol = *rho_tol;
        res = cl::rho_power_iteration(cs, power_opts);
      } else if (rho_method == "gradient") {
        require_seed(rho_seed, "rho --method gradient");
        cl::GradientOptions opts;
        opts.seed = *rho_seed;
        opts.restarts = rho_restarts;
        if (rho_tol) opts.tol = *rho_tol;
        res = cl::rho_gradient_ascent(cs, opts);
      } else {
        const auto oracle = cl::oracle_rho_bruteforce(cs, grid_depth);
        res.rho = oracle.value;
        res.lower = oracle.value;
        res.upper = oracle.upper;
        res.eigvec = cl::WeightVector{oracle.point, cl::Normalization::t_norm, rho_t};
        res.iterations = oracle.evaluations;
        res.residual = cl::eigenpair_residual(cs, oracle.point, oracle.value);
        res.method = cl::SpectralMethod::oracle;
        res.converged = true;
      }
      const auto fmt = resolve_format(globals, OutputFormat::json);
      if (fmt == OutputFormat::json) {
        emit(globals, dump(cl::to_json(res)));
      } else if (fmt == OutputFormat::csv) {
        emit(globals, "rho,lower,upper,iterations,residual,method\n" + cl::format_double(res.rho) +
                          "," + cl::format_double(res.lower) + "," + cl::format_double(res.upper) +
                          "," + std::to_string(res.iterations) + "," +
                          cl::format_double(res.residual) + "," +
                          std::string(cl::to_string(res.method)) + "\n");
      } else {
        emit(globals, cl::format_double(res.rho) + "\n");
      }
    } else if (*mu) {
      const cl::Graph g = mu_in.load();
      cl::LagrangianResult res;
      if (mu_method == "closed") {
        res = cl::mu_closed_form(g, mu_t);
      } else if (mu_method == "gradient") {
        require_seed(mu_seed, "mu --method gradient");
        cl::LagrangianOptions opts;
        opts.seed = *mu_seed;
        if (mu_restarts) opts.restarts = *mu_restarts;
        res = cl::mu_gradient(cl::enumerate_cliques(g, mu_t), opts);
      } else {
        const auto cs = cl::enumerate_cliques(g, mu_t);
        res = cl::mu_shift_local(g, cs, cl::WeightVector::uniform_simplex(g.order()));
      }
      const auto fmt = resolve_format(globals, OutputFormat::json);
      if (fmt == OutputFormat::json) {
        emit(globals, dump(cl::to_json(res)));
      } else if (fmt == OutputFormat::csv) {
        emit(globals, "mu,mu_exact,support_size,method\n" + cl::format_double(res.mu) + "," +
                          (res.exact ? cl::to_fraction_string(*res.exact) : "") + "," +
                          std::to_string(res.support_size) + "," +
                          std::string(cl::to_string(res.method)) + "\n");
      } else {
        emit(globals, cl::format_double(res.mu) + "\n");
      }
    } else if (*bounds) {
      const cl::Graph g = bounds_in.load();
      cl::BoundsOptions opts;
      opts.compute_omega = omega_exact;
      opts.r = bounds_r;
      opts.s = bounds_s;
      opts.budget = budget;
      if (bounds_s && !bounds_r) throw cl::ParameterError("--s requires --r");
      const auto rep = cl::bounds_report(g, bounds_t, opts);
      const auto fmt = resolve_format(globals, OutputFormat::json);
      if (fmt == OutputFormat::json) {
        emit(globals, dump(cl::to_json(rep)));
      } else if (fmt == OutputFormat::csv) {
        emit(globals, std::string(cl::kBoundsCsvHeader) + "\n" + cl::bounds_csv_row(rep) + "\n");
      } else {
        const Json j = cl::to_json(rep);
        std::ostringstream os;
        for (const auto& [key, value] : j.items()) os << key << ": " << value << '\n';
        emit(globals, os.str());
      }
    } else if (*sos) {
      const cl::Graph g = sos_in.load();
      const auto res = cl::sos_check(g, sos_r, sos_t, sos_s);
      const auto fmt = resolve_format(globals, OutputFormat::json);
      if (fmt == OutputFormat::json) {
        emit(globals, dump(cl::to_json(res)));
      } else if (fmt == OutputFormat::csv) {
        emit(globals, "holds,lhs,rhs,equality\n" + std::string(res.holds ? "true" : "false") +
                          "," + cl::format_double(res.lhs) + "," + cl::format_double(res.rhs) +
                          "," + (res.equality ? "true" : "false") + "\n");
      } else {
        emit(globals, std::string(res.holds ? "holds" : "violated") + "\n");
      }
    } else if (*edit) {
      const cl::Graph g = edit_in.load();
      cl::EditOptions opts;
      opts.strategy = force_exact   ? cl::EditStrategy::exact
                      : force_local ? cl::EditStrategy::local_search
                                    : cl::EditStrategy::automatic;
      opts.restarts = edit_restarts;
      const bool local = force_local || (!force_exact && g.order() > cl::kExactEditCutoff);
      if (local) {
        require_seed(edit_seed, "edit-dist local search");
        opts.seed = *edit_seed;
      }
      const auto res = cl::edit_distance_to_turan(g, edit_r, opts);
      const auto fmt = resolve_format(globals, OutputFormat::json);
      if (fmt == OutputFormat::json) {
        emit(globals, dump(cl::to_json(res)));
      } else if (fmt == OutputFormat::csv) {
        emit(globals, "distance,method,certified\n" + std::to_string(res.distance) + "," +
                          std::string(cl::to_string(res.method)) + "," +
                          (res.certified ? "true" : "false") + "\n");
      } else {
        emit(globals, std::to_string(res.distance) + "\n");
      }
    } else if (*sweep) {
      std::ifstream in(sweep_config);
      if (!in) {
        throw cl::IoError("cannot open sweep config '" + sweep_config +
                          "': file not found or unreadable");
      }
      cl::SweepConfig cfg;
      try {
        const Json j = Json::parse(in);
        cfg.n = j.at("n").get<std::vector<std::size_t>>();
        cfg.r = j.at("r").get<std::size_t>();
        cfg.t = j.at("t").get<std::size_t>();
        cfg.fractions = j.at("fractions").get<std::vector<double>>();
        cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
      } catch (const Json::exception& e) {
        throw cl::ParseError(cl::ErrorKind::parse, 0, std::string("sweep config: ") + e.what());
      }
      const auto records = cl::stability_sweep(cfg);
      const auto fmt = resolve_format(globals, OutputFormat::csv);
      std::ostringstream os;
      if (fmt == OutputFormat::json) {
        Json arr = Json::array();
        for (const auto& rec : records) arr.push_back(cl::to_json(rec));
        os << dump(Json{{"records", arr}, {"spearman", cl::sweep_spearman(records)}});
      } else if (fmt == OutputFormat::csv) {
        cl::write_sweep_csv(os, records);
      } else {
        cl::write_sweep_gnuplot(os, records);
      }
      emit(globals, os.str());
    }
  } catch (const cl::Error& e) {
    return fail(e);
  } catch (const std::exception& e) {
    std::cerr << cl::error_json("internal", e.what()).dump() << '\n';
    return 2;
  }
  return 0;
}
