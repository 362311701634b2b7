#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "frl/graph.hpp"
#include "frl/period.hpp"

namespace frl {

/// Graph with a known period and the tolerance a recomputation must meet.
struct CorpusEntry {
  std::string name;
  Multigraph graph;
  int dimension = 4;
  double expected = 0.0;
  double tolerance = 0.0;
  bool relative = false;
  QuadratureMethod method = QuadratureMethod::GaussTensor;
  std::string citation;
};

/// Bundled table: fish/D=4, triangle/D=6 and the wheel with three spokes/D=4.
const std::vector<CorpusEntry>& corpus_entries();

/// Reads a JSON-lines corpus file; blank lines and lines starting with '#'
/// are ignored. Throws Parse naming every malformed line.
std::vector<CorpusEntry> load_corpus_file(const std::filesystem::path& path);

struct CorpusCheck {
  const CorpusEntry* entry = nullptr;
  PeriodEstimate estimate;
  double deviation = 0.0;  // |value - expected|, relative if the entry is
  bool pass = false;
};

/// Recomputes each entry with its method and default settings.
std::vector<CorpusCheck> verify_corpus(const std::vector<CorpusEntry>& entries, int workers,
                                       std::uint64_t seed);

}  // namespace frl
