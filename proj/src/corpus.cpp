#include "frl/corpus.hpp"

#include <cmath>
#include <fstream>

#include "frl/error.hpp"
#include "frl/io.hpp"

namespace frl {

namespace {

constexpr double kZeta3 = 1.2020569031595942854;

}  // namespace

const std::vector<CorpusEntry>& corpus_entries() {
  static const std::vector<CorpusEntry> entries = {
      {"fish", Multigraph::banana(2), 4, 1.0, 1e-6, false, QuadratureMethod::GaussTensor,
       "two-vertex two-line graph; integrand is identically 1 on the simplex"},
      {"triangle", Multigraph::complete(3), 6, 0.5, 1e-4, false, QuadratureMethod::GaussTensor,
       "triangle in six dimensions; reduced two-variable integral equals 1/2"},
      {"wheel-3-spokes", Multigraph::wheel3(), 4, 6.0 * kZeta3, 0.01, true, QuadratureMethod::MonteCarlo,
       "complete graph K4; classical period 6 zeta(3)"},
  };
  return entries;
}

std::vector<CorpusEntry> load_corpus_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open corpus file " + path.string());
  std::vector<CorpusEntry> out;
  std::vector<std::string> problems;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      const Json j = Json::parse(line);
      CorpusEntry e{j.value("name", "entry-" + std::to_string(line_no)),
                    parse_graph(j.at("graph").get<std::string>()),
                    j.at("dim").get<int>(),
                    j.at("expected").get<double>(),
                    j.at("tolerance").get<double>(),
                    j.value("relative", false),
                    parse_quadrature_method(j.value("method", std::string("gauss"))),
                    j.value("citation", std::string())};
      if (!(e.tolerance > 0.0)) throw Error(ErrorKind::Parse, "tolerance must be positive");
      out.push_back(std::move(e));
    } catch (const std::exception& ex) {
      problems.push_back("line " + std::to_string(line_no) + ": " + ex.what());
    }
  }
  if (!problems.empty()) {
    std::string msg = "malformed corpus file " + path.string() + ":";
    for (const auto& p : problems) msg += "\n  " + p;
    throw Error(ErrorKind::Parse, msg);
  }
  return out;
}

std::vector<CorpusCheck> verify_corpus(const std::vector<CorpusEntry>& entries, int workers,
                                       std::uint64_t seed) {
  std::vector<CorpusCheck> out;
  for (const CorpusEntry& e : entries) {
    QuadratureConfig cfg;
    cfg.method = e.method;
    cfg.workers = workers;
    cfg.rng_seed = seed;
    CorpusCheck check;
    check.entry = &e;
    check.estimate = evaluate_period(e.graph, e.dimension, cfg);
    check.deviation = std::abs(check.estimate.value - e.expected);
    if (e.relative) check.deviation /= std::abs(e.expected);
    check.pass = check.deviation <= e.tolerance;
    out.push_back(check);
  }
  return out;
}

}  // namespace frl
