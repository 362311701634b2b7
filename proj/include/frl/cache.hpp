#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "frl/graph.hpp"
#include "frl/period.hpp"

namespace frl {

/// Key of a cached period: isomorphism-invariant graph form, dimension and a
/// fingerprint of every configuration field that affects the result.
std::string period_cache_key(const Multigraph& g, int D, const QuadratureConfig& cfg);

/// Append-only JSON-lines store of period estimates. Reads take a shared and
/// appends an exclusive advisory lock on the file.
class PeriodCache {
 public:
  explicit PeriodCache(std::filesystem::path path);

  /// Environment variable FRL_CACHE, else $XDG_CACHE_HOME/frl/periods.jsonl,
  /// else ~/.cache/frl/periods.jsonl.
  static std::filesystem::path default_path();

  const std::filesystem::path& path() const noexcept { return path_; }

  /// Latest entry for the key. Unparseable lines are skipped and reported in
  /// warnings().
  std::optional<PeriodEstimate> lookup(const std::string& key);
  void store(const std::string& key, const PeriodEstimate& estimate);

  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  std::filesystem::path path_;
  std::vector<std::string> warnings_;
};

}  // namespace frl
