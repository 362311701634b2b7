#include "frl/rg_comb.hpp"

#include <cctype>
#include <limits>

#include "frl/error.hpp"
#include "frl/power_counting.hpp"

namespace frl {

VertexMonomial::VertexMonomial(std::map<std::string, int> factors) {
  for (auto& [label, power] : factors) {
    if (power < 0) throw Error(ErrorKind::InvalidArgument, "negative power in monomial");
    if (label.empty()) throw Error(ErrorKind::InvalidArgument, "empty label in monomial");
    if (power > 0) factors_.emplace(label, power);
  }
}

namespace {

bool label_char(char c, bool first) {
  const auto u = static_cast<unsigned char>(c);
  return std::isalpha(u) || c == '_' || (!first && (std::isdigit(u) || c == '\''));
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    const auto num = static_cast<std::uint64_t>(n - k + i);
    if (r > std::numeric_limits<std::uint64_t>::max() / num)
      throw Error(ErrorKind::Capacity, "binomial coefficient overflows 64 bits");
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

}  // namespace

VertexMonomial VertexMonomial::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "1") return {};
  std::map<std::string, int> factors;
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::Parse, "monomial parse error at position " + std::to_string(pos) + ": " + what);
  };
  while (true) {
    const std::size_t start = pos;
    if (pos >= s.size() || !label_char(s[pos], true)) fail("expected a label");
    while (pos < s.size() && label_char(s[pos], false)) ++pos;
    std::string label = s.substr(start, pos - start);
    int power = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      const std::size_t digits = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (digits == pos) fail("expected a power after '^'");
      if (pos - digits > 6) fail("power too large");
      power = std::stoi(s.substr(digits, pos - digits));
    }
    factors[label] += power;
    if (pos == s.size()) break;
    if (s[pos] != '*') fail("expected '*'");
    ++pos;
  }
  return VertexMonomial(std::move(factors));
}

int VertexMonomial::degree() const {
  int d = 0;
  for (const auto& [label, power] : factors_) d += power;
  return d;
}

std::string to_string(const VertexMonomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& [label, power] : m.factors()) {
    if (!out.empty()) out += '*';
    out += label;
    if (power != 1) out += '^' + std::to_string(power);
  }
  return out;
}

std::vector<VertexMonomial> wick_submonomials(const VertexMonomial& p) {
  std::vector<std::pair<std::string, int>> base(p.factors().begin(), p.factors().end());
  if (base.empty()) return {VertexMonomial()};
  std::vector<int> exps(base.size(), 0);
  std::vector<VertexMonomial> out;
  while (true) {
    std::map<std::string, int> f;
    for (std::size_t i = 0; i < base.size(); ++i) f[base[i].first] = exps[i];
    out.emplace_back(std::move(f));
    // Lexicographic odometer: the last label varies fastest.
    std::size_t i = base.size() - 1;
    while (++exps[i] > base[i].second) {
      exps[i] = 0;
      if (i == 0) return out;
      --i;
    }
  }
}

std::vector<CoproductTerm> coproduct(const VertexMonomial& p) {
  std::vector<CoproductTerm> out;
  for (const VertexMonomial& q : wick_submonomials(p)) {
    std::uint64_t c = 1;
    std::map<std::string, int> rest;
    for (const auto& [label, n] : p.factors()) {
      const auto it = q.factors().find(label);
      const int m = it == q.factors().end() ? 0 : it->second;
      const std::uint64_t b = binomial(n, m);
      if (c > std::numeric_limits<std::uint64_t>::max() / b)
        throw Error(ErrorKind::Capacity, "coproduct coefficient overflows 64 bits");
      c *= b;
      rest[label] = n - m;
    }
    out.push_back({c, VertexMonomial(std::move(rest)), q});
  }
  return out;
}

std::string_view to_string(LeafStatus s) {
  switch (s) {
    case LeafStatus::Trivial: return "trivial";
    case LeafStatus::PrimitiveWithResidue: return "primitive-with-residue";
    case LeafStatus::RequiresExtension: return "requires-extension";
  }
  return "unknown";
}

std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "set partitions need n >= 1");
  std::vector<std::vector<std::vector<int>>> out;
  // a[i] is the block of element i; a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(n, 0), prefix_max(n, 0);
  while (true) {
    const int blocks = prefix_max[n - 1] + 1;
    std::vector<std::vector<int>> partition(blocks);
    for (int i = 0; i < n; ++i) partition[a[i]].push_back(i);
    out.push_back(std::move(partition));
    int i = n - 1;
    while (i > 0 && a[i] > prefix_max[i - 1]) --i;
    if (i == 0) return out;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (int j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<BetaTerm> beta_expansion(const Multigraph& g, int D) {
  require_supported_dimension(D);
  if (!g.is_connected()) throw Error(ErrorKind::InvalidArgument, "beta expansion needs a connected graph");
  const int n = g.vertex_count();
  if (n > kMaxBetaVertices)
    throw Error(ErrorKind::Capacity, "beta expansion is capped at " + std::to_string(kMaxBetaVertices) + " vertices");

  std::vector<BetaTerm> out;
  for (auto& partition : set_partitions(n)) {
    if (static_cast<int>(partition.size()) == n) continue;
    std::vector<int> block_of(n);
    for (std::size_t b = 0; b < partition.size(); ++b)
      for (int v : partition[b]) block_of[v] = static_cast<int>(b);

    std::vector<std::vector<int>> quotient(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (block_of[i] != block_of[j]) quotient[i][j] = g.multiplicity(i, j);

    std::vector<Multigraph> blocks;
    std::vector<LeafStatus> status;
    for (const auto& block : partition) {
      Multigraph sub = induced_subgraph(g, VertexSubset(g, block));
      if (sub.vertex_count() == 1) status.push_back(LeafStatus::Trivial);
      else if (sub.is_connected() && power_count(sub, D).eg_primitive)
        status.push_back(LeafStatus::PrimitiveWithResidue);
      else
        status.push_back(LeafStatus::RequiresExtension);
      blocks.push_back(std::move(sub));
    }
    out.push_back({std::move(partition), Multigraph(std::move(quotient)), std::move(blocks), std::move(status)});
  }
  return out;
}

ResidueValue primitive_beta_value(const Multigraph& g, int D, const QuadratureConfig& cfg) {
  require_supported_dimension(D);
  if (!g.is_connected() || !power_count(g, D).eg_primitive)
    throw Error(ErrorKind::NotPrimitive, "requires extension: graph " + to_dsl(g) + " is not EG-primitive at D=" +
                                             std::to_string(D));
  const PeriodEstimate p = evaluate_period(g, D, cfg);
  return residue_from_period(g, D, p.value);
}

}  // namespace frl
