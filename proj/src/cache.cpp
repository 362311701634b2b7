#include "frl/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "frl/error.hpp"
#include "frl/io.hpp"

namespace frl {

std::string period_cache_key(const Multigraph& g, int D, const QuadratureConfig& cfg) {
  std::ostringstream os;
  os << "v1|n=" << g.vertex_count() << "|g=";
  for (int l : canonical_upper_triangle(g)) os << l << '.';
  os << "|D=" << D << '|' << to_string(cfg.method);
  if (cfg.method == QuadratureMethod::GaussTensor) {
    const int p = cfg.points_per_axis ? cfg.points_per_axis : default_points_per_axis(g.edge_count() - 1);
    os << "|p=" << p << "|map=" << cfg.endpoint_map;
  } else {
    os << "|samples=" << cfg.samples << "|seed=" << cfg.rng_seed << "|shape=";
    if (cfg.dirichlet_shape) os << dump_json(Json(*cfg.dirichlet_shape));
    else os << "auto";
  }
  os << "|workers=" << cfg.workers;
  return os.str();
}

PeriodCache::PeriodCache(std::filesystem::path path) : path_(std::move(path)) {}

std::filesystem::path PeriodCache::default_path() {
  if (const char* env = std::getenv("FRL_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
    return std::filesystem::path(xdg) / "frl" / "periods.jsonl";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "frl" / "periods.jsonl";
  return "frl-periods.jsonl";
}

namespace {

class FileLock {
 public:
  FileLock(const std::filesystem::path& path, int flags, int operation) {
    fd_ = ::open(path.c_str(), flags, 0644);
    if (fd_ >= 0 && ::flock(fd_, operation) != 0) {
      ::close(fd_);
      fd_ = -1;
    }
  }
  ~FileLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

  int fd() const { return fd_; }

 private:
  int fd_ = -1;
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

std::optional<PeriodEstimate> PeriodCache::lookup(const std::string& key) {
  if (!std::filesystem::exists(path_)) return std::nullopt;
  FileLock lock(path_, O_RDONLY, LOCK_SH);
  if (lock.fd() < 0) {
    warnings_.push_back("cannot open cache file " + path_.string());
    return std::nullopt;
  }
  std::ifstream in(path_);
  std::optional<PeriodEstimate> found;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const Json j = Json::parse(line);
      if (j.at("key").get<std::string>() == key) found = period_estimate_from_json(j.at("value"));
    } catch (const std::exception&) {
      warnings_.push_back("skipping unparseable cache line " + std::to_string(line_no) + " in " + path_.string());
    }
  }
  return found;
}

void PeriodCache::store(const std::string& key, const PeriodEstimate& estimate) {
  std::error_code ec;
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path(), ec);
  FileLock lock(path_, O_WRONLY | O_CREAT | O_APPEND, LOCK_EX);
  if (lock.fd() < 0) throw Error(ErrorKind::Io, "cannot open cache file " + path_.string() + " for writing");
  Json entry;
  entry["key"] = key;
  entry["value"] = to_json(estimate);
  entry["created_at"] = utc_timestamp();
  const std::string line = dump_json(entry, 0) + "\n";
  std::size_t written = 0;
  while (written < line.size()) {
    const ssize_t n = ::write(lock.fd(), line.data() + written, line.size() - written);
    if (n <= 0) throw Error(ErrorKind::Io, "failed writing cache file " + path_.string());
    written += static_cast<std::size_t>(n);
  }
}

}  // namespace frl
