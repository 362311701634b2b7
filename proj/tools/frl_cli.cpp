// frl: periods and residues of Feynman graphs in position space.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "frl/cache.hpp"
#include "frl/corpus.hpp"
#include "frl/error.hpp"
#include "frl/graph_polynomial.hpp"
#include "frl/io.hpp"
#include "frl/period.hpp"
#include "frl/power_counting.hpp"
#include "frl/residue.hpp"
#include "frl/rg_comb.hpp"

namespace {

using frl::Json;

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNumerical = 4;

int exit_code(frl::ErrorKind kind) {
  switch (kind) {
    case frl::ErrorKind::Parse: return kExitParse;
    case frl::ErrorKind::NumericalFailure: return kExitNumerical;
    default: return kExitDomain;
  }
}

void emit(const Json& j) { std::cout << frl::dump_json(j) << '\n'; }

int emit_error(std::string_view kind, const std::string& message, int code) {
  emit({{"error", {{"kind", std::string(kind)}, {"message", message}}}});
  return code;
}

struct PeriodOptions {
  std::string method = "gauss";
  int points = 0;
  std::uint64_t samples = 10'000'000;
  std::uint64_t seed = 0;
  int workers = 1;
  std::optional<double> shape;
  bool no_endpoint_map = false;
  bool no_cache = false;
  std::string cache_path;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--method", method, "gauss or mc")->check(CLI::IsMember({"gauss", "gauss-tensor", "mc", "monte-carlo"}));
    cmd->add_option("--points", points, "Gauss points per axis (0 = default)");
    cmd->add_option("--samples", samples, "Monte Carlo samples");
    cmd->add_option("--seed", seed, "Monte Carlo seed");
    cmd->add_option("--workers", workers, "worker threads");
    cmd->add_option("--shape", shape, "Dirichlet shape of the Monte Carlo density (default: automatic)");
    cmd->add_flag("--no-endpoint-map", no_endpoint_map, "plain Gauss-Legendre nodes on each axis");
    cmd->add_flag("--no-cache", no_cache, "neither read nor write the period cache");
    cmd->add_option("--cache-path", cache_path, "period cache file (default: $FRL_CACHE or ~/.cache/frl)");
  }

  frl::QuadratureConfig config() const {
    frl::QuadratureConfig cfg;
    cfg.method = frl::parse_quadrature_method(method);
    cfg.points_per_axis = points;
    cfg.samples = samples;
    cfg.rng_seed = seed;
    cfg.workers = workers;
    cfg.dirichlet_shape = shape;
    cfg.endpoint_map = !no_endpoint_map;
    return cfg;
  }
};

frl::PeriodEstimate cached_period(const frl::Multigraph& g, int dim, const PeriodOptions& opts) {
  const frl::QuadratureConfig cfg = opts.config();
  cfg.validate();
  if (opts.no_cache) return frl::evaluate_period(g, dim, cfg);
  frl::PeriodCache cache(opts.cache_path.empty() ? frl::PeriodCache::default_path() : std::filesystem::path(opts.cache_path));
  const std::string key = frl::period_cache_key(g, dim, cfg);
  auto hit = cache.lookup(key);
  for (const auto& w : cache.warnings()) std::cerr << "warning: " << w << '\n';
  if (hit) {
    std::cerr << "cache hit: " << cache.path().string() << '\n';
    return *hit;
  }
  frl::PeriodEstimate est = frl::evaluate_period(g, dim, cfg);
  try {
    cache.store(key, est);
  } catch (const frl::Error& e) {
    std::cerr << "warning: " << e.what() << '\n';
  }
  return est;
}

Json graph_header(const frl::Multigraph& g) { return Json(frl::to_dsl(g)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Periods and distributional residues of Feynman graphs"};
  app.require_subcommand(1);

  std::string graph_text;
  int dim = 4;

  auto* classify = app.add_subcommand("classify", "power counting and primitivity");
  classify->add_option("graph", graph_text, "graph text or JSON")->required();
  classify->add_option("--dim", dim, "spacetime dimension")->required();

  std::string poly_method = "trees";
  int root = 0;
  auto* poly = app.add_subcommand("poly", "dual graph polynomial");
  poly->add_option("graph", graph_text, "graph text or JSON")->required();
  poly->add_option("--method", poly_method, "trees or minor")->check(CLI::IsMember({"trees", "minor"}));
  poly->add_option("--root", root, "root vertex of the Kirchhoff minor");

  PeriodOptions period_opts;
  auto* period = app.add_subcommand("period", "numerical period of an EG-primitive graph");
  period->add_option("graph", graph_text, "graph text or JSON")->required();
  period->add_option("--dim", dim, "spacetime dimension")->required();
  period_opts.add_to(period);

  auto* residue = app.add_subcommand("residue", "distributional residue of an EG-primitive graph");
  residue->add_option("graph", graph_text, "graph text or JSON")->required();
  residue->add_option("--dim", dim, "spacetime dimension")->required();
  period_opts.add_to(residue);

  int lines = 2;
  auto* banana = app.add_subcommand("banana", "closed-form residue of the two-vertex banana");
  banana->add_option("--edges", lines, "number of parallel lines")->required();
  banana->add_option("--dim", dim, "spacetime dimension")->required();

  std::string monomial_text;
  auto* coproduct = app.add_subcommand("coproduct", "Wick-submonomial coproduct of a vertex monomial");
  coproduct->add_option("monomial", monomial_text, "e.g. phi^4 or phi^2*dphi")->required();

  bool beta_values = false;
  auto* beta = app.add_subcommand("beta", "partition expansion of the RG generator");
  beta->add_option("graph", graph_text, "graph text or JSON")->required();
  beta->add_option("--dim", dim, "spacetime dimension")->required();
  beta->add_flag("--values", beta_values, "attach residues of primitive leaves (Gauss defaults)");

  bool verify = false;
  std::string corpus_file;
  int corpus_workers = 1;
  std::uint64_t corpus_seed = 0;
  auto* corpus = app.add_subcommand("corpus", "bundled known-period corpus");
  corpus->add_flag("--verify", verify, "recompute every entry");
  corpus->add_option("--file", corpus_file, "JSON-lines corpus file to use instead of the bundled table");
  corpus->add_option("--workers", corpus_workers, "worker threads");
  corpus->add_option("--seed", corpus_seed, "Monte Carlo seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error("usage", e.what(), kExitParse);
  }

  try {
    if (*classify) {
      const auto g = frl::parse_graph(graph_text);
      Json j{{"graph", graph_header(g)}};
      j.update(frl::to_json(frl::power_count(g, dim)));
      j["loop_number"] = frl::loop_number(g);
      j["cond_primitive"] = frl::check_cond_primitive(g, dim);
      j["convergence_precheck"] = frl::period_convergence_precheck(g, dim);
      j["symmetry_factor"] = frl::symmetry_factor(g);
      emit(j);
    } else if (*poly) {
      const auto g = frl::parse_graph(graph_text);
      const frl::Polynomial p =
          poly_method == "trees" ? frl::dual_polynomial_trees(g) : frl::dual_polynomial_minor(g, root);
      Json j{{"graph", graph_header(g)}, {"method", poly_method}};
      if (poly_method == "minor") j["root"] = root;
      j["polynomial"] = frl::to_string(p);
      j["terms"] = p.term_count();
      j["degree"] = p.degree();
      emit(j);
    } else if (*period) {
      const auto g = frl::parse_graph(graph_text);
      Json j{{"graph", graph_header(g)}, {"dim", dim}};
      j.update(frl::to_json(cached_period(g, dim, period_opts)));
      emit(j);
    } else if (*residue) {
      const auto g = frl::parse_graph(graph_text);
      const frl::PeriodEstimate p = cached_period(g, dim, period_opts);
      emit({{"graph", graph_header(g)},
            {"dim", dim},
            {"period", frl::to_json(p)},
            {"residue", frl::to_json(frl::residue_from_period(g, dim, p.value))}});
    } else if (*banana) {
      Json j{{"lines", lines}, {"dim", dim}};
      j.update(frl::to_json(frl::banana_residue(lines, dim)));
      emit(j);
    } else if (*coproduct) {
      const auto p = frl::VertexMonomial::parse(monomial_text);
      Json terms = Json::array();
      for (const auto& t : frl::coproduct(p)) terms.push_back(frl::to_json(t));
      emit({{"monomial", frl::to_string(p)}, {"terms", terms}});
    } else if (*beta) {
      const auto g = frl::parse_graph(graph_text);
      Json terms = Json::array();
      for (const auto& t : frl::beta_expansion(g, dim)) {
        Json tj = frl::to_json(t);
        if (beta_values) {
          Json values = Json::array();
          for (std::size_t b = 0; b < t.block_graphs.size(); ++b)
            values.push_back(t.leaf_status[b] == frl::LeafStatus::PrimitiveWithResidue
                                 ? frl::to_json(frl::primitive_beta_value(t.block_graphs[b], dim, {}))
                                 : Json(nullptr));
          tj["residues"] = values;
        }
        terms.push_back(tj);
      }
      emit({{"graph", graph_header(g)}, {"dim", dim}, {"terms", terms}});
    } else if (*corpus) {
      const std::vector<frl::CorpusEntry> entries =
          corpus_file.empty() ? frl::corpus_entries() : frl::load_corpus_file(corpus_file);
      Json list = Json::array();
      bool all_pass = true;
      if (verify) {
        for (const auto& c : frl::verify_corpus(entries, corpus_workers, corpus_seed)) {
          all_pass = all_pass && c.pass;
          list.push_back({{"name", c.entry->name},
                          {"graph", frl::to_dsl(c.entry->graph)},
                          {"dim", c.entry->dimension},
                          {"expected", c.entry->expected},
                          {"tolerance", c.entry->tolerance},
                          {"relative", c.entry->relative},
                          {"estimate", frl::to_json(c.estimate)},
                          {"deviation", c.deviation},
                          {"pass", c.pass}});
        }
      } else {
        for (const auto& e : entries)
          list.push_back({{"name", e.name},
                          {"graph", frl::to_dsl(e.graph)},
                          {"dim", e.dimension},
                          {"expected", e.expected},
                          {"tolerance", e.tolerance},
                          {"relative", e.relative},
                          {"method", std::string(frl::to_string(e.method))},
                          {"citation", e.citation}});
      }
      Json j{{"entries", list}};
      if (verify) j["all_pass"] = all_pass;
      emit(j);
      return all_pass ? EXIT_SUCCESS : kExitNumerical;
    }
  } catch (const frl::Error& e) {
    return emit_error(frl::to_string(e.kind()), e.what(), exit_code(e.kind()));
  } catch (const std::exception& e) {
    return emit_error("internal", e.what(), kExitDomain);
  }
  return EXIT_SUCCESS;
}
